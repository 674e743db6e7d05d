"""Exhaustive verification with a JSON report, e.g. `python scripts/verify_all.py --max-n 7`."""

import argparse
import json
import sys
import time

from accordion.oracle import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--report", help="write the JSON report here")
    args = ap.parse_args()
    t = time.time()
    rep = verify(args.max_n, workers=args.workers)
    print(rep.table())
    print(f"{rep.summary()} in {time.time() - t:.1f}s")
    for f in rep.failures:
        print("  ", f)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(rep.to_json(), fh, sort_keys=True)
    return 0 if rep.ok else 2


if __name__ == "__main__":
    sys.exit(main())
