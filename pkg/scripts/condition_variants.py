"""Count facet/nest mismatches under each reading of the incompatibility rules."""

import argparse

from accordion.complex import facets
from accordion.oracle import enumerate_dissections
from accordion.serpents import CONDITION4_VARIANTS, DEGENERATE_VARIANTS, enumerate_serpent_nests


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    pool = [D for n in range(3, args.max_n + 1) for D in enumerate_dissections(n)]
    counts = [len(facets(D)) for D in pool]
    print(f"{len(pool)} dissections")
    for c4 in CONDITION4_VARIANTS:
        for dg in DEGENERATE_VARIANTS:
            bad = [D for D, k in zip(pool, counts)
                   if len(enumerate_serpent_nests(D, condition4=c4, degenerate=dg)) != k]
            first = bad[0] if bad else "-"
            print(f"condition4={c4:<9} degenerate={dg:<8} mismatches={len(bad):>3}  first: {first}")


if __name__ == "__main__":
    main()
