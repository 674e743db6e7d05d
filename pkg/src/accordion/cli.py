"""Command line front end: facets, nests, phi, psi, verify, render."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bijection import BijectionError, phi, psi
from .complex import facets, is_facet
from .core import DissectionError, HollowDissection
from .oracle import verify
from .render import render_svg
from .serpents import Serpent, enumerate_serpent_nests, is_serpent_nest

EXIT_OK, EXIT_INVALID, EXIT_FAILURES = 0, 1, 2


class InputError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _read(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path).read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}")
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    return obj


def _pair(x, what):
    if not (isinstance(x, list) and len(x) == 2 and all(type(v) is int for v in x)):
        raise InputError(f"{what} {x!r} is not a pair of integers")
    return tuple(x)


def parse_dissection(obj) -> HollowDissection:
    if not isinstance(obj, dict) or "n" not in obj:
        raise InputError("dissection must be an object with keys 'n' and 'diagonals'")
    n = obj["n"]
    if type(n) is not int:
        raise InputError(f"n = {n!r} is not an integer")
    diags = obj.get("diagonals", [])
    if not isinstance(diags, list):
        raise InputError("'diagonals' must be a list")
    return HollowDissection.of(n, [_pair(d, "diagonal") for d in diags])


def _dissection_of(obj) -> HollowDissection:
    return parse_dissection(obj["dissection"] if "dissection" in obj else obj)


def parse_facet(obj, D: HollowDissection):
    if not isinstance(obj, list):
        raise InputError("'facet' must be a list of diagonals")
    F = frozenset(tuple(sorted(_pair(d, "facet diagonal"))) for d in obj)
    if not is_facet(F, D):
        raise InputError(f"{sorted(F)} is not a facet of {D}")
    return F


def parse_nest(obj, D: HollowDissection):
    if not isinstance(obj, list):
        raise InputError("'nest' must be a list of serpents")
    serpents = []
    for s in obj:
        if not isinstance(s, list) or not s:
            raise InputError(f"serpent {s!r} must be a nonempty list of diagonals")
        serpents.append(Serpent(tuple(_pair(e, "serpent edge") for e in s), D))
    N = frozenset(serpents)
    if len(N) != len(serpents):
        raise InputError("nest repeats a serpent")
    if not is_serpent_nest(N):
        raise InputError("serpents are pairwise incompatible")
    return N


def facet_json(F) -> list:
    return [list(d) for d in sorted(F)]


def nest_json(N) -> list:
    return [S.to_json() for S in sorted(N, key=lambda S: S.edges)]


def _cmd_facets(args, obj):
    D = _dissection_of(obj)
    return {"reference": D.to_json(), "facets": [facet_json(F) for F in facets(D)]}


def _cmd_nests(args, obj):
    D = _dissection_of(obj)
    Ns = enumerate_serpent_nests(D)
    return {"n": D.n, "dissection": D.to_json(), "nests": [nest_json(N) for N in Ns]}


def _cmd_phi(args, obj):
    D = _dissection_of(obj)
    if "facet" not in obj:
        raise InputError("missing key 'facet'")
    trace = [] if args.trace else None
    N = phi(D, parse_facet(obj["facet"], D), trace=trace)
    if trace is not None:
        sys.stderr.write(dumps({"trace": trace}))
    return {"n": D.n, "dissection": D.to_json(), "nest": nest_json(N)}


def _cmd_psi(args, obj):
    D = _dissection_of(obj)
    if "nest" not in obj:
        raise InputError("missing key 'nest'")
    trace = [] if args.trace else None
    F = psi(D, parse_nest(obj["nest"], D), trace=trace)
    if trace is not None:
        sys.stderr.write(dumps({"trace": trace}))
    return {"dissection": D.to_json(), "facet": facet_json(F)}


def _cmd_render(args, obj):
    D = _dissection_of(obj)
    F = parse_facet(obj["facet"], D) if "facet" in obj else None
    N = parse_nest(obj["nest"], D) if "nest" in obj else None
    return render_svg(D, facet=F, nest=N)


def _write(text: str, path: Optional[str]):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="accordion", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("facets", "nests", "phi", "psi", "render"):
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="JSON file, or - for stdin")
        p.add_argument("--output", default="-")
        if name in ("phi", "psi"):
            p.add_argument("--trace", action="store_true", help="decision trace on stderr")
        if name == "render":
            p.add_argument("--svg", help="SVG file (default: --output)")
    p = sub.add_parser("verify")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--output", default="-")
    p.add_argument("--workers", type=int, default=1)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            n_max = args.max_n if args.max_n is not None else args.n
            if n_max is None or n_max < 3:
                raise InputError("verify needs --max-n >= 3")
            report = verify(n_max, workers=args.workers)
            _write(dumps(report.to_json()), args.output)
            sys.stderr.write(report.table() + "\n" + report.summary() + "\n")
            return EXIT_OK if report.ok else EXIT_FAILURES
        obj = _read(args.input)
        if args.command == "render":
            _write(_cmd_render(args, obj), args.svg or args.output)
            return EXIT_OK
        handler = {"facets": _cmd_facets, "nests": _cmd_nests,
                   "phi": _cmd_phi, "psi": _cmd_psi}[args.command]
        _write(dumps(handler(args, obj)), args.output)
        return EXIT_OK
    except (InputError, DissectionError, ValueError, BijectionError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
