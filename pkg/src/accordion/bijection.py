"""The bijection between maximal accordion dissections and serpent nests.

Both directions recurse on the number of diagonals.  A dissection is first
normalized so that a leaf cell becomes the triangle (1, 3, 5) glued along
(1, 5).  A facet then has a distinguished solid vertex x with (2, x) and
(4, x) in the facet (or on the boundary), which splits the problem into an
upper part (beyond (2, x)) and a lower part (beyond (4, x)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .core import (Diagonal, HollowDissection, Relabel, accordion_path, canon,
                   contract_boundary_pair, crossed_hollow, diag, is_external, rotate)
from .complex import Facet, is_accordion_diagonal, is_facet
from .serpents import Nest, Serpent, dual_path_cells, incompatible, order_path

LEAF = (1, 5)


class BijectionError(RuntimeError):
    pass


# --- normalization ----------------------------------------------------------

@dataclass
class Normalization:
    source: HollowDissection
    target: HollowDissection
    steps: List[Relabel] = field(default_factory=list)
    trace: List[dict] = field(default_factory=list)

    def facet_forward(self, F: Iterable[Diagonal]) -> Facet:
        out = set(F)
        for st in self.steps:
            out = {st.solid_forward(d) for d in out}
        return frozenset(out)

    def facet_backward(self, F: Iterable[Diagonal]) -> Facet:
        out = set(F)
        for st in reversed(self.steps):
            out = {st.solid_backward(d) for d in out}
        return frozenset(out)

    def nest_forward(self, N: Iterable[Serpent]) -> Nest:
        out = list(N)
        for st in self.steps:
            out = [Serpent(tuple(st.hollow_forward(e) for e in S.edges), st.target) for S in out]
        return frozenset(out)

    def nest_backward(self, N: Iterable[Serpent]) -> Nest:
        out = list(N)
        for st in reversed(self.steps):
            out = [Serpent(tuple(st.hollow_backward(e) for e in S.edges), st.source) for S in out]
        return frozenset(out)


def _leaf_cell(D: HollowDissection) -> int:
    for i, c in enumerate(D.cells):
        if sum(1 for e in c.edges if e in D.diagonals) == 1:
            return i
    raise BijectionError(f"no leaf cell in {D}")


def normalize_leaf(D: HollowDissection) -> Normalization:
    """Contract the first leaf cell to a triangle and rotate it onto (1, 3, 5)."""
    if not D.diagonals:
        raise BijectionError("cannot normalize the empty dissection")
    norm = Normalization(D, D)
    cell = D.cells[_leaf_cell(D)]
    cur = D
    while len(cell) > 3:
        (e,) = [d for d in cell.edges if d in cur.diagonals]
        b = min(v for v in cell.vertices if v not in e)
        gamma, delta = [d for d in cell.edges if b in d]
        nxt, rel = contract_boundary_pair(cur, cell, gamma, delta)
        norm.steps.append(rel)
        norm.trace.append({"op": "contract", "n": cur.n, "vertex": b,
                           "edges": [list(gamma), list(delta)]})
        verts = tuple(sorted(rel.vertex[v] for v in cell.vertices if v != b))
        cell = next(c for c in nxt.cells if c.vertices == verts)
        cur = nxt
    (e,) = [d for d in cell.edges if d in cur.diagonals]
    p, q = e
    if canon(p + 4, cur.n) == q:
        start = p
    elif canon(q + 4, cur.n) == p:
        start = q
    else:
        raise BijectionError(f"leaf triangle {cell.vertices} is not of the form (a, a+2, a+4)")
    k = 1 - start
    if k:
        nxt, rel = rotate(cur, k)
        norm.steps.append(rel)
        norm.trace.append({"op": "rotate", "n": cur.n, "by": k})
        cur = nxt
    norm.target = cur
    if LEAF not in cur.diagonals:
        raise BijectionError(f"normalization of {D} failed, got {cur}")
    return norm


# --- the distinguished vertex and the split ----------------------------------

def _in_solid_barred(d: Diagonal, F: Facet, n: int) -> bool:
    return d in F or is_external(d, n)


def find_x(D: HollowDissection, F: Iterable[Diagonal]) -> int:
    """Smallest x in 6..2n with (2, x) in the barred facet; (4, x) must be there too."""
    F = frozenset(F)
    x = next(x for x in range(6, 2 * D.n + 1, 2) if _in_solid_barred((2, x), F, D.n))
    if not _in_solid_barred((4, x), F, D.n):
        raise BijectionError(f"(4, {x}) missing from facet {sorted(F)}: not maximal?")
    return x


@dataclass
class _Part:
    dissection: HollowDissection
    vertex: Dict[int, int]       # labels of D that survive (merged set goes to 1)
    merged: FrozenSet[int]       # hollow labels of D collapsed onto label 1
    fans: Dict[int, List[Diagonal]]  # part label a -> accordion diagonals of D at a

    def back(self, v: int) -> int:
        inv = {t: s for s, t in self.vertex.items() if s not in self.merged}
        return inv[v]


@dataclass
class SplitContext:
    dissection: HollowDissection
    x: int
    accordion: List[Diagonal]   # crossed by (2, x), from (1, 3) to (x-1, x+1)
    zigzag: List[Diagonal]      # with (1, 5) treated as a boundary edge, nearest first
    upper: _Part
    lower: _Part

    def part(self, side: str) -> _Part:
        return self.upper if side == "upper" else self.lower

    # facets
    def restrict(self, F: Iterable[Diagonal], side: str) -> Facet:
        P = self.part(side)
        m = P.dissection.n
        out = set()
        for a, b in F:
            if a in P.vertex and b in P.vertex and a not in P.merged and b not in P.merged:
                d = diag(P.vertex[a], P.vertex[b])
                if not is_external(d, m):
                    out.add(d)
        return frozenset(out)

    def lift_facet(self, F: Iterable[Diagonal], side: str) -> Facet:
        P = self.part(side)
        return frozenset(diag(P.back(a), P.back(b)) for a, b in F)

    # serpents
    def unfold(self, S: Serpent, side: str) -> Serpent:
        P = self.part(side)
        edges = set()
        for e in S.edges:
            if 1 in e:
                other = e[1] if e[0] == 1 else e[0]
                edges.update(P.fans[other])
            else:
                edges.add(diag(P.back(e[0]), P.back(e[1])))
        try:
            return Serpent(tuple(order_path(edges, self.dissection)), self.dissection)
        except ValueError as err:
            raise BijectionError(f"unfolding {S.edges} ({side}) breaks the path: {err}")

    def fold(self, S: Serpent, side: str) -> Optional[Serpent]:
        P = self.part(side)
        Dp = P.dissection
        images = set()
        for a, b in S.edges:
            ina, inb = a in P.merged, b in P.merged
            if ina and inb:
                return None
            d = diag(1 if ina else P.vertex[a], 1 if inb else P.vertex[b])
            if d not in Dp.diagonals:
                return None
            images.add(d)
        try:
            folded = Serpent(tuple(order_path(images, Dp)), Dp)
        except ValueError:
            return None
        return folded if self.unfold(folded, side) == S else None

    def zigzag_serpent(self, i: int) -> Serpent:
        """The serpent from (1, 5) to the i-th zigzag diagonal (0-based)."""
        k = self.accordion.index(self.zigzag[i])
        return Serpent(tuple(self.accordion[1:k + 1]), self.dissection)


def _part(D: HollowDissection, merged: List[int], keep: List[int]) -> _Part:
    # keep: labels of D in clockwise order starting right after the merged block
    m = (len(keep) + 1) // 2
    vertex = {v: 1 for v in merged}
    for i, v in enumerate(keep):
        vertex[v] = i + 2
    K = frozenset(merged)
    diags = set()
    fans: Dict[int, List[Diagonal]] = {}
    for d in sorted(D.diagonals):
        a, b = d
        ina, inb = a in K, b in K
        if ina and inb:
            continue
        img = diag(vertex[a], vertex[b])
        if ina or inb:
            fans.setdefault(vertex[b] if ina else vertex[a], []).append(d)
        if not is_external(img, m):
            diags.add(img)
    return _Part(HollowDissection(m, frozenset(diags)), vertex, K, fans)


def split_dissection(D: HollowDissection, x: int) -> SplitContext:
    n2 = 2 * D.n
    if x % 2 or not 6 <= x <= n2:
        raise ValueError(f"x = {x} must be even in 6..{n2}")
    if LEAF not in D.diagonals:
        raise ValueError(f"{D} is not normalized")
    if not is_accordion_diagonal((2, x), D):
        raise BijectionError(f"(2, {x}) is not an accordion diagonal of {D}")
    path = accordion_path(crossed_hollow((2, x), D), D)
    if path[0] != (1, 3):
        path = path[::-1]
    assert path[0] == (1, 3) and path[1] == LEAF, path
    inner = path[1:]
    zz = [inner[i] for i in range(1, len(inner) - 1)
          if set(inner[i - 1]) & set(inner[i]) != set(inner[i]) & set(inner[i + 1])]
    upper = _part(D, list(range(3, x, 2)), list(range(x, n2 + 1)) + [1, 2])
    lower = _part(D, list(range(x + 1, n2, 2)) + [1, 3], list(range(4, x + 1)))
    return SplitContext(D, x, path, zz, upper, lower)


# --- the two maps -------------------------------------------------------------

def _compatible_with_all(S: Serpent, N: Iterable[Serpent]) -> bool:
    return all(not incompatible(S, T) for T in N)


def phi(D: HollowDissection, F: Iterable[Diagonal], check: bool = True,
        trace: Optional[list] = None) -> Nest:
    """Serpent nest of a maximal accordion dissection."""
    F = frozenset(F)
    if trace is None:
        trace = []
    if not D.diagonals:
        if F:
            raise BijectionError(f"{sorted(F)} is not a facet of the empty dissection")
        return frozenset()
    norm = normalize_leaf(D)
    Dn, Fn = norm.target, norm.facet_forward(F)
    x = find_x(Dn, Fn)
    trace.append({"n": D.n, "normalize": norm.trace, "x": x})
    ctx = split_dissection(Dn, x)
    N = set()
    for side in ("upper", "lower"):
        P = ctx.part(side)
        for S in phi(P.dissection, ctx.restrict(Fn, side), check, trace):
            N.add(ctx.unfold(S, side))
    if check:
        _assert_nest(N, f"unfolded parts for x={x}")
    if x == 6:
        N.add(Serpent((LEAF,), Dn))
    elif x != 2 * Dn.n:
        if not ctx.zigzag:
            raise BijectionError(f"empty zigzag for internal (2, {x})")
        first = ctx.zigzag_serpent(0)
        if check and not _compatible_with_all(first, N):
            raise BijectionError(f"first zigzag serpent {first.edges} is not compatible")
        for i in reversed(range(len(ctx.zigzag))):
            S = ctx.zigzag_serpent(i)
            if _compatible_with_all(S, N):
                N.add(S)
                trace.append({"zigzag": len(ctx.zigzag), "i_max": i + 1})
                break
        else:
            raise BijectionError("no compatible zigzag serpent")
    return norm.nest_backward(N)


def _assert_nest(N: Iterable[Serpent], what: str):
    N = list(N)
    for i in range(len(N)):
        for j in range(i + 1, len(N)):
            if incompatible(N[i], N[j]):
                raise BijectionError(f"{what}: {N[i].edges} and {N[j].edges} are incompatible")


def _split_nest(ctx: SplitContext, N: Iterable[Serpent]) -> Optional[Tuple[Nest, Nest]]:
    up, lo = set(), set()
    for T in N:
        fu, fl = ctx.fold(T, "upper"), ctx.fold(T, "lower")
        if (fu is None) == (fl is None):
            return None
        (up if fu is not None else lo).add(fu if fu is not None else fl)
    return frozenset(up), frozenset(lo)


def _x_of_external(e: Diagonal, n: int) -> int:
    a, b = e
    return 2 * n if (a, b) == (1, 2 * n - 1) else a + 1


def _walk(D: HollowDissection, S: Serpent, rest: Nest, strict: bool, trace: list) -> int:
    """Follow the gamma diagonals out of S until an external edge fixes x.

    ``strict`` asserts that every intermediate S_i is compatible with the
    serpents not containing lambda_i; this fails on a few octagons while
    the walk itself still lands on the right x.
    """
    path = list(S.edges)
    if path[0] != LEAF:
        path.reverse()
    cells = dual_path_cells(path, D)
    cell = cells[-1]
    delta, prev = path[-1], path[-2]
    u = next(v for v in delta if v not in prev)
    gamma = D.cells[cell].edge_at(delta, u)
    step = 1
    while not is_external(gamma, D.n):
        path.append(gamma)
        if strict and step > 1 and not is_external(lam, D.n):
            cur = Serpent(tuple(path), D)
            bad = [T for T in rest if lam not in T.edge_set and incompatible(cur, T)]
            if bad:
                raise BijectionError(f"S_{step} = {cur.edges} incompatible with {bad[0].edges}")
        step += 1
        cell = D.dual_tree.other(gamma, cell)
        C = D.cells[cell]
        lam = C.edge_at(gamma, u)
        if not is_external(lam, D.n):
            plus = Serpent(tuple(path + [lam]), D)
            turn = any(incompatible(plus, T) for T in rest if lam not in T.edge_set)
        else:
            turn = not _termination_ok(D, _x_of_external(lam, D.n), rest)
        if turn:
            w = gamma[0] if gamma[1] == u else gamma[1]
            if w == u:
                raise BijectionError("case (ii) kept the pivot")
            nxt = C.edge_at(gamma, w)
            u = w
        else:
            nxt = lam
        trace.append({"step": step, "gamma": list(nxt), "pivot": u, "case": "ii" if turn else "i"})
        gamma = nxt
    x = _x_of_external(gamma, D.n)
    if not 8 <= x <= 2 * D.n - 2:
        raise BijectionError(f"walk ended at x = {x}, outside 8..{2 * D.n - 2}")
    return x


def _termination_ok(D: HollowDissection, x: int, rest: Nest) -> bool:
    if not 8 <= x <= 2 * D.n - 2 or not is_accordion_diagonal((2, x), D):
        return False
    return _split_nest(split_dissection(D, x), rest) is not None


def psi(D: HollowDissection, N: Iterable[Serpent], check: bool = True,
        trace: Optional[list] = None, strict: bool = False) -> Facet:
    """Maximal accordion dissection of a serpent nest."""
    N = frozenset(N)
    if trace is None:
        trace = []
    if not D.diagonals:
        if N:
            raise BijectionError("the empty dissection has no serpents")
        return frozenset()
    norm = normalize_leaf(D)
    Dn, Nn = norm.target, norm.nest_forward(N)
    trace.append({"n": D.n, "normalize": norm.trace})
    holders = [S for S in Nn if LEAF in S.edge_set]
    if not holders:
        x, rest = 2 * Dn.n, Nn
    elif len(holders) > 1:
        raise BijectionError(f"{len(holders)} serpents contain {LEAF}")
    else:
        (S,) = holders
        rest = Nn - {S}
        x = 6 if S.edges == (LEAF,) else _walk(Dn, S, rest, strict, trace)
    trace.append({"x": x})
    ctx = split_dissection(Dn, x)
    parts = _split_nest(ctx, rest)
    if parts is None:
        raise BijectionError(f"serpents do not separate at x = {x}")
    F = {d for d in ((2, x), (4, x)) if not is_external(d, Dn.n)}
    for side, sub in zip(("upper", "lower"), parts):
        P = ctx.part(side)
        F |= ctx.lift_facet(psi(P.dissection, sub, check, trace, strict), side)
    out = norm.facet_backward(F)
    if check and not is_facet(out, D):
        raise BijectionError(f"{sorted(out)} is not a maximal accordion dissection of {D}")
    return out
