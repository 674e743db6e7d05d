"""Exhaustive generators and brute-force cross-checks."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .core import (Diagonal, HollowDissection, contract_boundary_pair, crosses, diag,
                   internal_diagonals, is_external)
from .complex import accordion_diagonals, facets
from .serpents import enumerate_serpent_nests

MAX_FAILURE_RECORDS = 20


def _polygon_dissections(vs: Tuple[int, ...]) -> Iterator[FrozenSet[Diagonal]]:
    # dissections of the polygon vs[0..k] keeping (vs[0], vs[-1]) as a side
    k = len(vs) - 1
    if k < 2:
        yield frozenset()
        return
    for r in range(1, k):
        for inner in combinations(range(1, k), r):
            idx = (0,) + inner + (k,)
            parts = []
            for i, j in zip(idx, idx[1:]):
                if j - i > 1:
                    sub = vs[i:j + 1]
                    parts.append([ds | {(sub[0], sub[-1])} for ds in _polygon_dissections(sub)])
            yield from _products(parts)


def _products(parts) -> Iterator[FrozenSet[Diagonal]]:
    if not parts:
        yield frozenset()
        return
    for head in parts[0]:
        for tail in _products(parts[1:]):
            yield head | tail


def enumerate_dissections(n: int) -> List[HollowDissection]:
    """All hollow dissections of the n-gon, sorted by size then diagonals."""
    if n < 3:
        raise ValueError("n must be at least 3")
    vs = tuple(range(1, 2 * n, 2))
    out = {ds for ds in _polygon_dissections(vs)}
    return [HollowDissection(n, ds) for ds in sorted(out, key=lambda s: (len(s), sorted(s)))]


def schroeder_dissection_count(n: int) -> int:
    """Number of dissections of a convex n-gon via the large Schroeder recurrence."""
    r = [1]
    for m in range(1, n - 1):
        r.append(r[m - 1] + sum(r[k] * r[m - 1 - k] for k in range(m)))
    k = n - 2
    return 1 if k == 0 else r[k] // 2


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    num, den = 1, 1
    for j in range(2, k + 1):
        num *= k + j
        den *= j
    return num // den


def triangulations(n: int) -> List[HollowDissection]:
    return [D for D in enumerate_dissections(n) if len(D.diagonals) == n - 3]


def quadrangulations(n: int) -> List[HollowDissection]:
    return [D for D in enumerate_dissections(n)
            if D.diagonals and all(len(c) == 4 for c in D.cells)]


def sample_dissections(n: int, k: int, seed: int = 0) -> List[HollowDissection]:
    pool = enumerate_dissections(n)
    if k >= len(pool):
        return pool
    rng = random.Random(seed)
    idx = sorted(rng.sample(range(len(pool)), k))
    return [pool[i] for i in idx]


def stokes_diagonals(D: HollowDissection) -> List[Diagonal]:
    """Solid diagonals never crossing two opposite edges of a quadrangular cell."""
    quads = [c for c in D.cells if len(c) == 4]
    if len(quads) != len(D.cells):
        raise ValueError(f"{D} is not a quadrangulation")

    def ok(d):
        for c in quads:
            e = c.edges
            if (crosses(d, e[0]) and crosses(d, e[2])) or (crosses(d, e[1]) and crosses(d, e[3])):
                return False
        return True

    return [d for d in internal_diagonals(D.n, 0) if ok(d)]


def contractions(D: HollowDissection):
    """Every applicable boundary contraction: (cell, gamma, delta, contracted)."""
    out = []
    for c in D.cells:
        if len(c) <= 3:
            continue
        es = c.edges
        for i in range(len(es)):
            g, d = es[i], es[(i + 1) % len(es)]
            if not (is_external(g, D.n) and is_external(d, D.n)):
                continue
            b = (set(g) & set(d)).pop()
            if D.degree(b):
                continue
            out.append((c, g, d, contract_boundary_pair(D, c, g, d)[0]))
    return out


def _runs(cell, n) -> List[List[Diagonal]]:
    # maximal runs of internal edges between consecutive boundary edges of a cell
    es = list(cell.edges)
    ext = [is_external(e, n) for e in es]
    if not any(ext):
        return []
    k = ext.index(True)
    runs = []
    for e, x in zip(es[k:] + es[:k], ext[k:] + ext[:k]):
        if x:
            runs.append([])
        else:
            runs[-1].append(e)
    return runs


def _far_side(cell, e: Diagonal, n: int) -> set:
    p, q = e
    inside = {v for v in range(p + 2, q, 2)}
    if any(p < v < q for v in cell.vertices):
        return set(range(1, 2 * n, 2)) - inside - {p, q}
    return inside


def join_components(D: HollowDissection, cell_index: int) -> List[HollowDissection]:
    """Dissections hanging off each run of internal edges of a cell.

    Empty runs give trivial components (a polygon with no diagonals).
    """
    c = D.cells[cell_index]
    out = []
    for run in _runs(c, D.n):
        vs = set(c.vertices)
        for e in run:
            vs |= _far_side(c, e, D.n)
        relabel = {v: 2 * i + 1 for i, v in enumerate(sorted(vs))}
        m = len(vs)
        ds = {diag(relabel[a], relabel[b]) for a, b in D.diagonals if a in vs and b in vs}
        out.append(HollowDissection(m, frozenset(d for d in ds if not is_external(d, m))))
    return out


def join_applicable(D: HollowDissection, cell_index: int) -> bool:
    return sum(1 for r in _runs(D.cells[cell_index], D.n) if r) >= 2


@dataclass
class Record:
    n: int
    diagonals: List[List[int]]
    facets: int
    nests: int
    roundtrip: bool
    facet_sizes: List[int]
    catalan: Optional[bool] = None
    join: Optional[bool] = None


@dataclass
class VerificationReport:
    n_max: int
    records: List[Record] = field(default_factory=list)
    failures: List[dict] = field(default_factory=list)
    failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def summary(self) -> str:
        return f"{len(self.records)} dissections, {self.failure_count} failures"

    def table(self) -> str:
        rows = ["  n  dissections  facets  roundtrip"]
        for n in range(3, self.n_max + 1):
            rs = [r for r in self.records if r.n == n]
            good = sum(r.roundtrip for r in rs)
            rows.append(f"{n:>3}  {len(rs):>11}  {sum(r.facets for r in rs):>6}  {good:>5}/{len(rs)}")
        return "\n".join(rows)

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "dissections": len(self.records),
                "failure_count": self.failure_count, "failures": self.failures,
                "records": [asdict(r) for r in self.records]}


def check_dissection(D: HollowDissection) -> Tuple[Record, List[dict]]:
    """Run every per-instance check on one dissection."""
    from .bijection import phi, psi

    fails = []
    where = {"n": D.n, "diagonals": [list(d) for d in D.sorted_diagonals]}

    def fail(check, detail):
        fails.append(dict(where, check=check, detail=detail))

    Fs = facets(D)
    Ns = enumerate_serpent_nests(D)
    if len(Fs) != len(Ns):
        fail("count", f"{len(Fs)} facets, {len(Ns)} nests")
    rt = True
    try:
        images = [phi(D, F) for F in Fs]
        if len(set(images)) != len(images) or set(images) != set(Ns):
            rt = False
            fail("phi", "image of the facets is not the set of nests")
        for F, N in zip(Fs, images):
            if psi(D, N) != F:
                rt = False
                fail("psi_phi", f"facet {sorted(F)}")
        for N in Ns:
            if phi(D, psi(D, N)) != N:
                rt = False
                fail("phi_psi", f"nest {sorted(S.edges for S in N)}")
    except Exception as exc:  # reported, not raised
        rt = False
        fail("roundtrip", repr(exc))
    sizes = sorted({len(F) for F in Fs})
    if len(sizes) > 1:
        fail("purity", f"facet sizes {sizes}")
    rec = Record(D.n, where["diagonals"], len(Fs), len(Ns), rt, sizes)
    if len(D.diagonals) == D.n - 3:
        rec.catalan = len(Fs) == catalan(D.n - 2)
        if not rec.catalan:
            fail("catalan", f"{len(Fs)} != {catalan(D.n - 2)}")
    joins = [i for i in range(len(D.cells)) if join_applicable(D, i)]
    if joins:
        rec.join = True
        for i in joins:
            prod = 1
            for P in join_components(D, i):
                prod *= len(facets(P))
            if prod != len(Fs):
                rec.join = False
                fail("join", f"cell {D.cells[i].vertices}: {prod} != {len(Fs)}")
    return rec, fails


def verify(n_max: int, workers: int = 1) -> VerificationReport:
    """Check every dissection with 3 <= n <= n_max; deterministic in any worker count."""
    pool = [D for n in range(3, n_max + 1) for D in enumerate_dissections(n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(check_dissection, pool, chunksize=8))
    else:
        results = [check_dissection(D) for D in pool]
    report = VerificationReport(n_max)
    for rec, fails in results:
        report.records.append(rec)
        report.failure_count += len(fails)
        room = MAX_FAILURE_RECORDS - len(report.failures)
        report.failures.extend(fails[:max(room, 0)])
    return report
