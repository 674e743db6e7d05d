"""Draw every facet of a dissection next to its serpent nest as SVG files."""

import argparse
import pathlib

from accordion.bijection import phi
from accordion.complex import facets
from accordion.core import HollowDissection
from accordion.render import render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--diagonals", default="1-5,5-9,5-11", help="e.g. 1-5,5-9")
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    diags = [tuple(map(int, d.split("-"))) for d in args.diagonals.split(",") if d]
    D = HollowDissection.of(args.n, diags)
    out = pathlib.Path(args.out)
    out.mkdir(exist_ok=True)
    for i, F in enumerate(facets(D)):
        (out / f"facet{i:03d}.svg").write_text(render_svg(D, facet=F, nest=phi(D, F)))
    print(f"wrote {i + 1} drawings to {out}/")


if __name__ == "__main__":
    main()
