"""Serpents, their incompatibility conditions, and serpent nests."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .core import Diagonal, HollowDissection, cyclic_lt, diag

Labeling = Tuple[int, int, int, int]  # (u_h, v_h, u_t, v_t)

# Which vertex the second alternative of Condition 4 asks S2 to turn at:
# "literal" reads u_t as printed, "corrected" reads u_h.
CONDITION4_VARIANTS = ("literal", "corrected")
# How a single shared edge (a, b) is labelled: "same" uses (a, b, a, b),
# "reversed" uses (a, b, b, a), i.e. a corridor of width zero.
DEGENERATE_VARIANTS = ("same", "reversed")

DEFAULT_CONDITION4 = "corrected"
DEFAULT_DEGENERATE = "reversed"


@dataclass(frozen=True)
class Serpent:
    edges: Tuple[Diagonal, ...]
    dissection: HollowDissection = field(compare=False, repr=False)

    def __post_init__(self):
        es = tuple(diag(*e) for e in self.edges)
        if len(es) > 1 and es[-1] < es[0]:
            es = es[::-1]
        object.__setattr__(self, "edges", es)
        if not is_serpent(es, self.dissection):
            raise ValueError(f"{list(es)} is not a serpent of {self.dissection}")

    @cached_property
    def edge_set(self) -> FrozenSet[Diagonal]:
        return frozenset(self.edges)

    @property
    def final_edges(self) -> FrozenSet[Diagonal]:
        return frozenset((self.edges[0], self.edges[-1]))

    @cached_property
    def ends(self) -> FrozenSet[Tuple[Diagonal, int]]:
        """Pairs (final edge, cell) where the dual path terminates."""
        cells = dual_path_cells(self.edges, self.dissection)
        return frozenset(((self.edges[0], cells[0]), (self.edges[-1], cells[-1])))

    def __len__(self) -> int:
        return len(self.edges)

    def to_json(self) -> list:
        return [list(e) for e in self.edges]


def _common_cell(D: HollowDissection, e: Diagonal, f: Diagonal) -> Optional[int]:
    common = set(D.dual_tree.edges[e]) & set(D.dual_tree.edges[f])
    return common.pop() if len(common) == 1 else None


def dual_path_cells(edges: Sequence[Diagonal], D: HollowDissection) -> Optional[List[int]]:
    """Cells visited by a sequence of dual edges, or None if it is not a dual path."""
    if not edges or any(e not in D.diagonals for e in edges):
        return None
    if len(set(edges)) != len(edges):
        return None
    if len(edges) == 1:
        return list(D.dual_tree.edges[edges[0]])
    first = _common_cell(D, edges[0], edges[1])
    if first is None:
        return None
    cells = [D.dual_tree.other(edges[0], first), first]
    for i in range(1, len(edges)):
        e = edges[i]
        if cells[-1] not in D.dual_tree.edges[e]:
            return None
        cells.append(D.dual_tree.other(e, cells[-1]))
    if len(set(cells)) != len(cells):
        return None
    return cells


def is_serpent(edges: Sequence[Diagonal], D: HollowDissection) -> bool:
    edges = [diag(*e) for e in edges]
    if dual_path_cells(edges, D) is None:
        return False
    return all(set(edges[i]) & set(edges[i + 1]) for i in range(len(edges) - 1))


def order_path(edge_set: Iterable[Diagonal], D: HollowDissection) -> List[Diagonal]:
    """Arrange a set of dual-tree edges forming a path in path order."""
    es = set(edge_set)
    if len(es) <= 1:
        return sorted(es)
    touch = {}
    for e in es:
        for c in D.dual_tree.edges[e]:
            touch.setdefault(c, []).append(e)
    if any(len(v) > 2 for v in touch.values()):
        raise ValueError(f"{sorted(es)} is not a dual path")
    ends = sorted(e for e in es if any(len(touch[c]) == 1 for c in D.dual_tree.edges[e]))
    if len(ends) != 2:
        raise ValueError(f"{sorted(es)} is not a dual path")
    path = [ends[0]]
    cell = next(c for c in D.dual_tree.edges[ends[0]] if len(touch[c]) == 2)
    while True:
        nxt = [e for e in touch[cell] if e != path[-1]]
        path.append(nxt[0])
        cell = D.dual_tree.other(nxt[0], cell)
        if len(touch.get(cell, ())) != 2:
            break
    if len(path) != len(es):
        raise ValueError(f"{sorted(es)} is not a dual path")
    return path


def enumerate_serpents(D: HollowDissection) -> List[Serpent]:
    tree = D.dual_tree
    found = set()

    def grow(path, cell, visited):
        found.add(tuple(path))
        c = D.cells[cell]
        last = path[-1]
        for e in c.edges:
            if e == last or e not in D.diagonals or not set(e) & set(last):
                continue
            nxt = tree.other(e, cell)
            if nxt in visited:
                continue
            path.append(e)
            visited.add(nxt)
            grow(path, nxt, visited)
            visited.discard(nxt)
            path.pop()

    for e in sorted(D.diagonals):
        for cell in tree.edges[e]:
            grow([e], cell, {tree.other(e, cell), cell})
    canon = {p if len(p) == 1 or p[0] < p[-1] else p[::-1] for p in found}
    return [Serpent(p, D) for p in sorted(canon, key=lambda p: (len(p), p))]


def turns_at(S: Serpent, v: int) -> bool:
    return sum(1 for e in S.edges if v in e) >= 2


def _chain_ok(uh, vh, ut, vt, n) -> bool:
    m = 2 * n
    p = lambda x: (x - uh) % m
    return 0 < p(vh) <= p(ut) < p(vt)


def intersection_labelings(I: Serpent, degenerate: str = DEFAULT_DEGENERATE) -> List[Labeling]:
    """Labelings (u_h, v_h, u_t, v_t) of the final edges of an intersection.

    Includes the labeling obtained by exchanging the head and tail pairs.
    """
    n = I.dissection.n
    if len(I.edges) == 1:
        a, b = I.edges[0]
        if degenerate == "same":
            return [(a, b, a, b)]
        if degenerate == "reversed":
            return [(a, b, b, a), (b, a, a, b)]
        raise ValueError(f"unknown degenerate labeling {degenerate!r}")
    out = []
    for eh, et in ((I.edges[0], I.edges[-1]), (I.edges[-1], I.edges[0])):
        for uh, vh in (eh, eh[::-1]):
            for ut, vt in (et, et[::-1]):
                if _chain_ok(uh, vh, ut, vt, n):
                    out.append((uh, vh, ut, vt))
    if not out:
        raise AssertionError(f"no cyclic labeling for final edges {eh}, {et}")
    out += [(ut, vt, uh, vh) for uh, vh, ut, vt in out]
    return list(dict.fromkeys(out))


def serpent_intersection(S1: Serpent, S2: Serpent,
                         degenerate: str = DEFAULT_DEGENERATE
                         ) -> Optional[Tuple[Serpent, List[Labeling]]]:
    if S1.dissection != S2.dissection:
        raise ValueError("serpents live in different dissections")
    common = [e for e in S1.edges if e in S2.edge_set]
    if not common:
        return None
    I = Serpent(tuple(common), S1.dissection)
    return I, intersection_labelings(I, degenerate)


def _end_cells(I: Serpent, lab: Labeling) -> Tuple[int, int]:
    """Cells just beyond the head and tail edges of the intersection I."""
    D = I.dissection
    uh, vh, ut, vt = lab
    if len(I.edges) > 1:
        cells = dual_path_cells(I.edges, D)
        head = diag(uh, vh)
        return (cells[0], cells[-1]) if head == I.edges[0] else (cells[-1], cells[0])
    # single edge: the head cell lies on the clockwise arc from u_h to v_h
    i, j = D.dual_tree.edges[I.edges[0]]
    arc = lambda c: any(cyclic_lt(uh, w, vh, D.n) for w in D.cells[c].vertices)
    return (i, j) if arc(i) else (j, i)


def _beyond(S: Serpent, e: Diagonal, cell: int) -> Optional[Diagonal]:
    """The edge of S following e into ``cell``, if S goes on past e there."""
    k = S.edges.index(e)
    edges = S.dissection.cells[cell].edges
    for j in (k - 1, k + 1):
        if 0 <= j < len(S.edges) and S.edges[j] in edges:
            return S.edges[j]
    return None


def _violated(S1: Serpent, S2: Serpent, I: Serpent, lab: Labeling, condition4: str) -> int:
    uh, vh, ut, vt = lab
    head, tail = diag(uh, vh), diag(ut, vt)
    hcell, tcell = _end_cells(I, lab)
    nxt = {(S, side): _beyond(S, e, c)
           for S in (S1, S2) for side, e, c in (("h", head, hcell), ("t", tail, tcell))}
    ends = lambda S, side: nxt[S, side] is None
    turn = lambda S, side, w: nxt[S, side] is not None and w in nxt[S, side]
    if (ends(S1, "h") and ends(S2, "h")) or (ends(S1, "t") and ends(S2, "t")):
        return 1
    if turn(S1, "h", uh) and turn(S1, "t", ut) and turn(S2, "h", vh) and turn(S2, "t", vt):
        return 2
    if ends(S2, "h") and ((turn(S1, "h", uh) and turn(S1, "t", ut))
                          or (turn(S1, "h", vh) and turn(S1, "t", vt))):
        return 3
    if ends(S1, "h") and ends(S2, "t"):
        alt = ut if condition4 == "literal" else uh
        if (turn(S1, "t", ut) and turn(S2, "h", vh)) or (turn(S1, "t", vt) and turn(S2, "h", alt)):
            return 4
    return 0


def incompatibility(S1: Serpent, S2: Serpent, condition4: str = DEFAULT_CONDITION4,
                    degenerate: str = DEFAULT_DEGENERATE) -> int:
    """The first incompatibility condition (1-4) met by the pair, or 0."""
    if condition4 not in CONDITION4_VARIANTS:
        raise ValueError(f"unknown Condition 4 variant {condition4!r}")
    res = serpent_intersection(S1, S2, degenerate)
    if res is None:
        return 0
    I, labs = res
    for A, B in ((S1, S2), (S2, S1)):
        for lab in labs:
            c = _violated(A, B, I, lab, condition4)
            if c:
                return c
    return 0


def incompatible(S1: Serpent, S2: Serpent, condition4: str = DEFAULT_CONDITION4,
                 degenerate: str = DEFAULT_DEGENERATE) -> bool:
    return incompatibility(S1, S2, condition4, degenerate) != 0


def is_serpent_nest(serpents: Iterable[Serpent], **rules) -> bool:
    ss = list(serpents)
    return not any(incompatible(ss[i], ss[j], **rules)
                   for i in range(len(ss)) for j in range(i + 1, len(ss)))


Nest = FrozenSet[Serpent]


def nest_key(N: Nest):
    return (len(N), sorted(S.edges for S in N))


def enumerate_serpent_nests(D: HollowDissection, **rules) -> List[Nest]:
    serpents = enumerate_serpents(D)
    k = len(serpents)
    ok = [[i != j and not incompatible(serpents[i], serpents[j], **rules)
           for j in range(k)] for i in range(k)]
    out = []

    def extend(start, chosen):
        out.append(frozenset(serpents[i] for i in chosen))
        for i in range(start, k):
            if all(ok[i][j] for j in chosen):
                chosen.append(i)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    return sorted(out, key=nest_key)
