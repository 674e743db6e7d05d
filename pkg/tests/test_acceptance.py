"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest.
"""

import json
import pathlib
import subprocess
import sys
import time

import pytest

from accordion.bijection import phi, psi
from accordion.complex import accordion_diagonals, facets
from accordion.core import HollowDissection
from accordion.oracle import (catalan, contractions, enumerate_dissections, join_applicable,
                              join_components, quadrangulations, sample_dissections,
                              schroeder_dissection_count, stokes_diagonals, triangulations)
from accordion.serpents import enumerate_serpent_nests

GOLD = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def report(capsys):
    def say(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        return bool(ok)
    return say


def round_trip_failures(D):
    Fs, Ns = facets(D), enumerate_serpent_nests(D)
    images = [phi(D, F) for F in Fs]
    bad = sum(psi(D, N) != F for F, N in zip(Fs, images))
    bad += sum(phi(D, psi(D, N)) != N for N in Ns)
    bad += set(images) != set(Ns)
    return bad


def test_count_equality(report):
    t = time.time()
    pool = [D for n in range(3, 8) for D in enumerate_dissections(n)]
    bad = [D for D in pool if len(facets(D)) != len(enumerate_serpent_nests(D))]
    dt = time.time() - t
    ok = len(pool) == 257 and not bad and dt < 300
    assert report("count equality n<=7", ok,
                  f"{len(pool)} dissections, {len(bad)} mismatches, {dt:.1f}s"), bad[:3]


def test_round_trips(report):
    pool = [D for n in range(3, 7) for D in enumerate_dissections(n)]
    pool += sample_dissections(7, 100, seed=2024)
    bad = [D for D in pool if round_trip_failures(D)]
    ok = not bad and sum(D.n == 7 for D in pool) >= 100
    assert report("round trips n<=6 + 100 at n=7", ok,
                  f"{len(pool)} dissections, {len(bad)} with failures"), bad[:3]


def test_associahedron(report):
    got = {n: sorted({len(facets(T)) for T in triangulations(n)}) for n in range(4, 9)}
    ok = all(got[n] == [catalan(n - 2)] for n in got)
    assert report("triangulations give Catalan(n-2)", ok,
                  " ".join(f"n={n}:{got[n]}" for n in got))


def test_empty_dissection(report):
    got = {n: (len(facets(HollowDissection.of(n))),
               len(enumerate_serpent_nests(HollowDissection.of(n)))) for n in range(3, 9)}
    ok = all(v == (1, 1) for v in got.values())
    assert report("empty dissection has 1 facet and 1 nest", ok, str(got))


def test_single_diagonal(report):
    got = [(len(facets(D)), len(enumerate_serpent_nests(D)))
           for D in (HollowDissection.of(4, [(1, 5)]), HollowDissection.of(4, [(3, 7)]))]
    ok = all(g == (2, 2) for g in got)
    assert report("single diagonal at n=4", ok, f"(facets, nests) = {got}")


def test_reduction_invariance(report):
    total, bad = 0, []
    for n in range(4, 7):
        for D in enumerate_dissections(n):
            k = len(facets(D))
            for cell, g, d, D2 in contractions(D):
                total += 1
                if len(facets(D2)) != k:
                    bad.append((D, g, d))
    assert report("contraction preserves facet count n<=6", total > 0 and not bad,
                  f"{total} contractions, {len(bad)} mismatches"), bad[:3]


def test_join_multiplicativity(report):
    total, bad = 0, []
    for n in range(3, 7):
        for D in enumerate_dissections(n):
            for i in range(len(D.cells)):
                if not join_applicable(D, i):
                    continue
                total += 1
                prod = 1
                for P in join_components(D, i):
                    prod *= len(facets(P))
                if prod != len(facets(D)):
                    bad.append((D, i))
    assert report("join multiplicativity n<=6", total > 0 and not bad,
                  f"{total} separating cells, {len(bad)} mismatches"), bad[:3]


def test_stokes(report):
    qs = quadrangulations(6) + quadrangulations(8)
    bad = [Q for Q in qs if set(stokes_diagonals(Q)) != set(accordion_diagonals(Q))]
    assert report("quadrangulations match the opposite-edge rule", qs and not bad,
                  f"{len(qs)} quadrangulations, {len(bad)} mismatches"), bad[:3]


def test_generator_counts(report):
    got = [len(enumerate_dissections(n)) for n in range(3, 8)]
    want = [schroeder_dissection_count(n) for n in range(3, 8)]
    ok = got == want == [1, 3, 11, 45, 197]
    assert report("dissection generator counts", ok, f"{got} vs recurrence {want}")


def _cli(args, stdin):
    return subprocess.run([sys.executable, "-m", "accordion", *args], input=stdin,
                          capture_output=True, text=True).stdout


def test_cli_golden(report):
    mismatches, checked = [], 0
    for src in sorted(GOLD.glob("*.input.json")):
        name = src.name.split(".")[0]
        text = src.read_text()
        pair = (GOLD / f"{name}.phi.json").read_text()
        for args, stdin, gold in ((["facets"], text, "facets.json"),
                                  (["nests"], text, "nests.json"),
                                  (["render"], text, "svg"),
                                  (["render"], pair, "nest.svg")):
            runs = {_cli(args, stdin) for _ in range(2)}
            checked += 1
            if runs != {(GOLD / f"{name}.{gold}").read_text()}:
                mismatches.append(f"{name}.{gold}")
        facet = json.loads((GOLD / f"{name}.facets.json").read_text())
        inp = json.dumps({"dissection": facet["reference"], "facet": facet["facets"][-1]},
                         sort_keys=True) + "\n"
        if _cli(["phi"], inp) != pair or _cli(["psi"], pair) != inp:
            mismatches.append(f"{name} phi/psi")
    assert report("CLI golden outputs byte-stable", checked > 0 and not mismatches,
                  f"{checked} outputs checked, mismatches: {mismatches or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
