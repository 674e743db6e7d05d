from hypothesis import strategies as st

from accordion.core import HollowDissection, crosses, internal_diagonals


@st.composite
def dissections(draw, min_n=3, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pool = draw(st.permutations(internal_diagonals(n, 1)))
    keep = draw(st.integers(0, len(pool)))
    chosen = []
    for d in pool[:keep]:
        if not any(crosses(d, e) for e in chosen):
            chosen.append(d)
    return HollowDissection(n, frozenset(chosen))
