#!/usr/bin/env python3
"""Build sample progression realizations and audit their part sizes.

Prints one row per construction: parameters, part sizes, the closed-form
size prediction, and the realized score set.  Optionally dumps DOT files
for the small graphs.
"""

import argparse
from pathlib import Path

from scoresets.constructions import build_arithmetic, build_geometric

GEOMETRIC_SAMPLES = [(1, 2, 4), (2, 2, 3), (1, 3, 3), (2, 4, 2), (1, 5, 3)]
ARITHMETIC_SAMPLES = [(1, 3, 4), (2, 5, 3), (3, 3, 4), (4, 2, 3), (5, 2, 4)]


def geometric_size(a: int, d: int, n: int) -> int:
    return a * sum((-1) ** i * d ** (n - i) for i in range(n + 1))


def arithmetic_size(a: int, d: int, n: int) -> int:
    if n % 2 == 0:
        return n * d // 2 + a
    return (n + 1) * d // 2


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dot-dir", metavar="DIR", help="write DOT files here")
    args = parser.parse_args()

    rows = []
    for a, d, n in GEOMETRIC_SAMPLES:
        r = build_geometric(a, d, n)
        predicted = geometric_size(a, d, n) if d > 2 else "-"
        rows.append((f"geometric a={a} d={d} n={n}", r, predicted))
    for a, d, n in ARITHMETIC_SAMPLES:
        r = build_arithmetic(a, d, n)
        predicted = arithmetic_size(a, d, n) if d > a else "-"
        rows.append((f"arithmetic a={a} d={d} n={n}", r, predicted))

    for name, realization, predicted in rows:
        g = realization.graph
        realization.verify()
        print(f"{name:28s} m={g.m:<5d} n={g.n:<5d} closed-form={predicted!s:5s} set={g.score_set()}")
        if args.dot_dir and g.m * g.n <= 400:
            path = Path(args.dot_dir) / (name.replace(" ", "_").replace("=", "") + ".dot")
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(realization.to_dot())
            print(f"{'':28s} wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
