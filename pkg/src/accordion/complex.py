"""Accordion diagonals and the faces/facets of the accordion complex."""

from __future__ import annotations

from typing import FrozenSet, List

from .core import (Diagonal, HollowDissection, crossed_hollow, crosses, is_accordion,
                   is_external, internal_diagonals)

Facet = FrozenSet[Diagonal]


def is_accordion_diagonal(delta: Diagonal, D: HollowDissection) -> bool:
    if delta[0] % 2 or delta[1] % 2:
        raise ValueError(f"{delta} is not a solid diagonal")
    if is_external(delta, D.n):
        return True
    return is_accordion(crossed_hollow(delta, D), D)


def accordion_diagonals(D: HollowDissection) -> List[Diagonal]:
    return [d for d in internal_diagonals(D.n, 0) if is_accordion_diagonal(d, D)]


def _compat_masks(cands: List[Diagonal]) -> List[int]:
    masks = []
    for i, d in enumerate(cands):
        m = 0
        for j, e in enumerate(cands):
            if i != j and not crosses(d, e):
                m |= 1 << j
        masks.append(m)
    return masks


def maximal_cliques(masks: List[int]) -> List[int]:
    """Bron-Kerbosch with pivoting over a compatibility bit-matrix."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_src = p | x
        u = (pivot_src & -pivot_src).bit_length() - 1
        best = bin(p & masks[u]).count("1")
        q = pivot_src
        while q:
            w = (q & -q).bit_length() - 1
            q &= q - 1
            c = bin(p & masks[w]).count("1")
            if c > best:
                u, best = w, c
        rest = p & ~masks[u]
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            bit = 1 << v
            expand(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << len(masks)) - 1, 0)
    return out


def _bits(mask: int, items: list) -> list:
    return [items[i] for i in range(len(items)) if mask >> i & 1]


def facet_key(F: Facet):
    return (len(F), sorted(F))


def facets(D: HollowDissection) -> List[Facet]:
    """Inclusion-maximal sets of pairwise noncrossing accordion diagonals."""
    cands = accordion_diagonals(D)
    masks = _compat_masks(cands)
    found = [frozenset(_bits(m, cands)) for m in maximal_cliques(masks)]
    for F in found:
        for d in cands:
            if d not in F and not any(crosses(d, e) for e in F):
                raise AssertionError(f"facet {sorted(F)} is not maximal: {d} fits")
    return sorted(found, key=facet_key)


def faces(D: HollowDissection) -> List[Facet]:
    """All faces, as the deduplicated downward closure of the facets."""
    seen = set()
    for F in facets(D):
        items = sorted(F)
        for m in range(1 << len(items)):
            seen.add(frozenset(_bits(m, items)))
    return sorted(seen, key=facet_key)


def is_facet(F, D: HollowDissection) -> bool:
    F = frozenset(F)
    cands = accordion_diagonals(D)
    if not F <= set(cands):
        return False
    if any(crosses(d, e) for d in F for e in F):
        return False
    return all(d in F or any(crosses(d, e) for e in F) for d in cands)
