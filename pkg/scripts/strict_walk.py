"""List instances where the intermediate-serpent invariant of the psi walk fails.

The maps themselves are checked too, so a line here means "invariant broken,
round trip still fine" unless the last column says otherwise.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor

from accordion.bijection import BijectionError, phi, psi
from accordion.complex import facets
from accordion.oracle import enumerate_dissections
from accordion.serpents import enumerate_serpent_nests


def check(D):
    broken, rt = 0, True
    Ns = enumerate_serpent_nests(D)
    for N in Ns:
        F = psi(D, N)
        rt &= phi(D, F) == N
        try:
            psi(D, N, strict=True)
        except BijectionError:
            broken += 1
    rt &= len(Ns) == len(facets(D))
    return D, broken, len(Ns), rt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()
    hits = 0
    with ProcessPoolExecutor(args.workers) as ex:
        for D, broken, total, rt in ex.map(check, enumerate_dissections(args.n), chunksize=4):
            if broken or not rt:
                hits += 1
                print(f"{D}  strict failures {broken}/{total}  round trip {'ok' if rt else 'BROKEN'}")
    print(f"{hits} dissections with a broken invariant at n={args.n}")


if __name__ == "__main__":
    main()
