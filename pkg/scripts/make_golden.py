"""Regenerate the CLI golden files in tests/golden."""

import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
GOLD = ROOT / "tests" / "golden"

CASES = {
    "square": {"n": 4, "diagonals": [[1, 5]]},
    "fan6": {"n": 6, "diagonals": [[1, 5], [5, 9], [5, 11]]},
    "zig7": {"n": 7, "diagonals": [[1, 5], [5, 9], [9, 13]]},
}


def run(*args, stdin=""):
    out = subprocess.run([sys.executable, "-m", "accordion", *args], input=stdin,
                         capture_output=True, text=True, check=True)
    return out.stdout


def main():
    GOLD.mkdir(exist_ok=True)
    for name, D in CASES.items():
        src = json.dumps(D, sort_keys=True) + "\n"
        (GOLD / f"{name}.input.json").write_text(src)
        fs = run("facets", stdin=src)
        (GOLD / f"{name}.facets.json").write_text(fs)
        (GOLD / f"{name}.nests.json").write_text(run("nests", stdin=src))
        F = json.loads(fs)["facets"][-1]
        pair = json.dumps({"dissection": D, "facet": F}, sort_keys=True) + "\n"
        (GOLD / f"{name}.phi.json").write_text(run("phi", stdin=pair))
        (GOLD / f"{name}.svg").write_text(run("render", stdin=src))
        nest = json.loads(run("phi", stdin=pair))
        (GOLD / f"{name}.nest.svg").write_text(run("render", stdin=json.dumps(nest)))


if __name__ == "__main__":
    main()
