"""Vertices, diagonals, dissections, cells, dual trees and accordions.

The 2n points on the circle carry labels 1..2n, clockwise.  Odd labels are
hollow, even labels are solid.  A diagonal is a sorted pair ``(a, b)`` of
labels with the same parity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Tuple

Diagonal = Tuple[int, int]


class DissectionError(ValueError):
    pass


def is_hollow(v: int) -> bool:
    return v % 2 == 1


def canon(v: int, n: int) -> int:
    """Representative of ``v`` modulo 2n in 1..2n."""
    return (v - 1) % (2 * n) + 1


def diag(u: int, v: int) -> Diagonal:
    return (u, v) if u < v else (v, u)


def cyclic_lt(u: int, v: int, w: int, n: int) -> bool:
    """True iff u, v, w are pairwise distinct and appear clockwise in this order."""
    m = 2 * n
    dv, dw = (v - u) % m, (w - u) % m
    return 0 < dv < dw


def cyclic_interval(u: int, w: int, n: int, parity: int | None = None) -> List[int]:
    """Labels met walking clockwise from u to w, both included."""
    out = [u]
    v = u
    while v != w:
        v = canon(v + 1, n)
        out.append(v)
    if parity is not None:
        out = [x for x in out if x % 2 == parity]
    return out


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    a1, b1 = d1
    a2, b2 = d2
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def separates(d: Diagonal, u: int, v: int) -> bool:
    a, b = d
    if u in d or v in d:
        raise ValueError(f"{u} or {v} is an endpoint of {d}")
    return (a < u < b) != (a < v < b)


def is_external(d: Diagonal, n: int) -> bool:
    a, b = d
    return b - a == 2 or (a, b) == (1, 2 * n - 1) or (a, b) == (2, 2 * n)


def boundary_edges(n: int, parity: int) -> List[Diagonal]:
    """Boundary edges of the hollow (parity 1) or solid (parity 0) polygon."""
    verts = [v for v in range(1, 2 * n + 1) if v % 2 == parity]
    return sorted(diag(verts[i], verts[(i + 1) % n]) for i in range(n))


def internal_diagonals(n: int, parity: int) -> List[Diagonal]:
    verts = [v for v in range(1, 2 * n + 1) if v % 2 == parity]
    return [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
            if not is_external((a, b), n)]


@dataclass(frozen=True)
class Cell:
    vertices: Tuple[int, ...]
    n: int = field(compare=False)

    @property
    def edges(self) -> Tuple[Diagonal, ...]:
        vs = self.vertices
        return tuple(diag(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def is_internal(self, e: Diagonal) -> bool:
        return not is_external(e, self.n)

    def neighbours(self, e: Diagonal) -> Tuple[Diagonal, Diagonal]:
        """The two edges of the cell adjacent to ``e`` (sharing e[0], sharing e[1])."""
        es = self.edges
        i = es.index(e)
        prev_e, next_e = es[i - 1], es[(i + 1) % len(es)]
        if e[0] in prev_e:
            return prev_e, next_e
        return next_e, prev_e

    def edge_at(self, e: Diagonal, v: int) -> Diagonal:
        """The edge of the cell other than ``e`` with endpoint ``v``."""
        x, y = self.neighbours(e)
        return x if v == e[0] else y

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class DualTree:
    ncells: int
    edges: Dict[Diagonal, Tuple[int, int]]

    def other(self, e: Diagonal, cell: int) -> int:
        i, j = self.edges[e]
        return j if cell == i else i

    def adjacency(self) -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {i: [] for i in range(self.ncells)}
        for i, j in self.edges.values():
            adj[i].append(j)
            adj[j].append(i)
        return adj


@dataclass(frozen=True)
class HollowDissection:
    n: int
    diagonals: FrozenSet[Diagonal]

    def __post_init__(self):
        if self.n < 2:
            raise DissectionError(f"need at least 2 hollow vertices, got n={self.n}")
        ds = frozenset(diag(*d) for d in self.diagonals)
        object.__setattr__(self, "diagonals", ds)
        for a, b in ds:
            if not (1 <= a <= 2 * self.n and 1 <= b <= 2 * self.n):
                raise DissectionError(f"diagonal {(a, b)} has a label outside 1..{2 * self.n}")
            if not (is_hollow(a) and is_hollow(b)):
                raise DissectionError(f"diagonal {(a, b)} is not hollow (odd labels required)")
            if a == b or is_external((a, b), self.n):
                raise DissectionError(f"diagonal {(a, b)} is not an internal diagonal")
        for d1 in ds:
            for d2 in ds:
                if d1 < d2 and crosses(d1, d2):
                    raise DissectionError(f"diagonals {d1} and {d2} cross")

    @classmethod
    def of(cls, n: int, diagonals: Iterable[Iterable[int]] = ()) -> "HollowDissection":
        return cls(n, frozenset(tuple(d) for d in diagonals))

    @property
    def sorted_diagonals(self) -> List[Diagonal]:
        return sorted(self.diagonals)

    @cached_property
    def barred(self) -> FrozenSet[Diagonal]:
        return self.diagonals | frozenset(boundary_edges(self.n, 1))

    @cached_property
    def cells(self) -> List[Cell]:
        return compute_cells(self)

    @cached_property
    def dual_tree(self) -> DualTree:
        return dual_tree(self)

    @cached_property
    def cells_of_edge(self) -> Dict[Diagonal, List[int]]:
        """Indices of the cells having each element of the barred dissection as an edge."""
        out: Dict[Diagonal, List[int]] = {}
        for i, c in enumerate(self.cells):
            for e in c.edges:
                out.setdefault(e, []).append(i)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for d in self.diagonals if v in d)

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.sorted_diagonals]}

    def __repr__(self) -> str:
        return f"HollowDissection(n={self.n}, diagonals={self.sorted_diagonals})"


def compute_cells(D: HollowDissection) -> List[Cell]:
    """Cells of D, found by splitting regions along one diagonal at a time."""
    cells = []
    stack = [list(range(1, 2 * D.n, 2))]
    while stack:
        region = stack.pop()
        pos = {v: i for i, v in enumerate(region)}
        cut = None
        for d in sorted(D.diagonals):
            if d[0] in pos and d[1] in pos:
                i, j = pos[d[0]], pos[d[1]]
                if (j - i) % len(region) not in (1, len(region) - 1):
                    cut = d
                    break
        if cut is None:
            cells.append(Cell(tuple(sorted(region)), D.n))
            continue
        a, b = cut
        inside = [v for v in region if a < v < b]
        outside = [v for v in region if not a <= v <= b]
        stack.append(sorted([a, b] + inside))
        stack.append(sorted([a, b] + outside))
    return sorted(cells, key=lambda c: c.vertices)


def dual_tree(D: HollowDissection) -> DualTree:
    edges = {}
    for e, idx in D.cells_of_edge.items():
        if e in D.diagonals:
            edges[e] = (idx[0], idx[1])
    return DualTree(len(D.cells), edges)


def crossed_hollow(delta: Diagonal, D: HollowDissection) -> FrozenSet[Diagonal]:
    """Elements of the barred dissection crossed by the solid diagonal ``delta``."""
    return frozenset(e for e in D.barred if crosses(e, delta))


def is_accordion(A: Iterable[Diagonal], D: HollowDissection) -> bool:
    A = frozenset(A)
    if not A <= D.barred:
        raise ValueError(f"{sorted(A - D.barred)} not in the barred dissection")
    for c in D.cells:
        hit = [e for e in c.edges if e in A]
        if len(hit) == 1 or len(hit) > 2:
            return False
        if len(hit) == 2 and not set(hit[0]) & set(hit[1]):
            return False
    return True


def accordion_path(A: Iterable[Diagonal], D: HollowDissection) -> List[Diagonal]:
    """Order an accordion along the cells it runs through.

    Two elements are linked when they are the incident pair of some cell; the
    result starts at the end whose element is smaller.
    """
    A = frozenset(A)
    if not is_accordion(A, D):
        raise ValueError("not an accordion")
    if len(A) <= 1:
        return sorted(A)
    adj: Dict[Diagonal, List[Diagonal]] = {e: [] for e in A}
    for c in D.cells:
        hit = [e for e in c.edges if e in A]
        if len(hit) == 2:
            adj[hit[0]].append(hit[1])
            adj[hit[1]].append(hit[0])
    ends = sorted(e for e in A if len(adj[e]) == 1)
    if len(ends) != 2 or any(len(v) > 2 for v in adj.values()):
        raise ValueError("accordion does not form a single path")
    path = [ends[0]]
    prev = None
    while len(path) < len(A):
        cur = path[-1]
        nxt = [e for e in adj[cur] if e != prev]
        if not nxt:
            raise ValueError("accordion does not form a single path")
        prev = cur
        path.append(nxt[0])
    return path


def zigzag_of(A: Iterable[Diagonal], D: HollowDissection) -> List[Diagonal]:
    """Elements of A whose removal disconnects A, in path order.

    Along the path an element disconnects A exactly when it shares different
    endpoints with its predecessor and its successor.
    """
    path = accordion_path(A, D)
    out = []
    for i in range(1, len(path) - 1):
        left = set(path[i - 1]) & set(path[i])
        right = set(path[i]) & set(path[i + 1])
        if left != right:
            out.append(path[i])
    return out


@dataclass(frozen=True)
class Accordion:
    diagonals: FrozenSet[Diagonal]
    reference: HollowDissection

    def __post_init__(self):
        if not is_accordion(self.diagonals, self.reference):
            raise ValueError(f"{sorted(self.diagonals)} is not an accordion")

    @cached_property
    def path(self) -> List[Diagonal]:
        return accordion_path(self.diagonals, self.reference)

    @cached_property
    def zigzag(self) -> List[Diagonal]:
        return zigzag_of(self.diagonals, self.reference)


# --- relabelling -----------------------------------------------------------

@dataclass(frozen=True)
class Relabel:
    """A label map between a source and a target dissection.

    ``vertex`` sends source labels to target labels (hollow labels only need to
    survive when they carry diagonals).  Solid diagonals are transported by
    :meth:`solid_forward` / :meth:`solid_backward`, which may consult the
    accordion structure when two solid vertices were merged.
    """
    source: HollowDissection
    target: HollowDissection
    vertex: Dict[int, int]
    merged: Tuple[int, int] | None = None  # (kept solid label, dropped solid label) in source

    @cached_property
    def inverse(self) -> Dict[int, int]:
        inv = {}
        for s, t in self.vertex.items():
            if self.merged is not None and s == self.merged[1]:
                continue
            inv[t] = s
        return inv

    def hollow_forward(self, d: Diagonal) -> Diagonal:
        return diag(self.vertex[d[0]], self.vertex[d[1]])

    def hollow_backward(self, d: Diagonal) -> Diagonal:
        return diag(self.inverse[d[0]], self.inverse[d[1]])

    def solid_forward(self, d: Diagonal) -> Diagonal:
        return diag(self.vertex[d[0]], self.vertex[d[1]])

    def solid_backward(self, d: Diagonal) -> Diagonal:
        from .complex import is_accordion_diagonal

        a, b = (self.inverse[d[0]], self.inverse[d[1]])
        if self.merged is None:
            return diag(a, b)
        keep, drop = self.merged
        if keep not in (a, b):
            return diag(a, b)
        other = b if a == keep else a
        first, second = diag(keep, other), diag(drop, other)
        ok1 = is_accordion_diagonal(first, self.source)
        ok2 = is_accordion_diagonal(second, self.source)
        if ok1 == ok2:
            raise ValueError(f"cannot lift {d}: both or neither of {first}, {second} are accordion diagonals")
        return first if ok1 else second


def rotate(D: HollowDissection, k: int) -> Tuple[HollowDissection, Relabel]:
    if k % 2:
        raise ValueError(f"rotation by {k} does not preserve parity")
    vmap = {v: canon(v + k, D.n) for v in range(1, 2 * D.n + 1)}
    target = HollowDissection(D.n, frozenset(diag(vmap[a], vmap[b]) for a, b in D.diagonals))
    return target, Relabel(D, target, vmap)


def contract_boundary_pair(D: HollowDissection, cell: Cell, gamma: Diagonal,
                           delta: Diagonal) -> Tuple[HollowDissection, Relabel]:
    """Merge two consecutive boundary edges of a nontriangular cell into one.

    The shared hollow vertex b and the solid vertex b+1 disappear; b+1 is
    merged into b-1.  Labels are renumbered to 1..2(n-1).
    """
    if len(cell) <= 3:
        raise ValueError(f"cell {cell.vertices} is triangular")
    gamma, delta = diag(*gamma), diag(*delta)
    edges = cell.edges
    if gamma not in edges or delta not in edges:
        raise ValueError(f"{gamma}, {delta} are not edges of cell {cell.vertices}")
    if not (is_external(gamma, D.n) and is_external(delta, D.n)):
        raise ValueError(f"{gamma}, {delta} must both be boundary edges")
    shared = set(gamma) & set(delta)
    if len(shared) != 1 or gamma == delta:
        raise ValueError(f"{gamma}, {delta} are not consecutive")
    b = shared.pop()
    if D.degree(b) != 0:
        raise ValueError(f"vertex {b} carries internal diagonals")
    n2 = 2 * D.n
    drop_solid = canon(b + 1, D.n)
    keep_solid = canon(b - 1, D.n)
    vmap = {}
    for v in range(1, n2 + 1):
        if v == b:
            continue
        if v == drop_solid:
            src = keep_solid
        else:
            src = v
        # b is odd and b + 1 <= 2n, so removed labels are b and b + 1
        vmap[v] = src if src < b else src - 2
    target = HollowDissection(D.n - 1, frozenset(diag(vmap[a], vmap[c]) for a, c in D.diagonals))
    return target, Relabel(D, target, vmap, merged=(keep_solid, drop_solid))
