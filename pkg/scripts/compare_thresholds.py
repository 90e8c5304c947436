#!/usr/bin/env python3
"""Compare very-ampleness thresholds across bound families on a few profiles.

Each profile declares a dimension, a mu lower bound, and surface-style
intersection numbers; the table marks which family gives the smallest
certified multiple.
"""

import json

from posbounds.cli import compare
from posbounds.report import value_to_json

PROFILES = [
    {"name": "minimal-surface", "n": 2, "mu": 1, "Ln": 1, "LK": 0},
    {"name": "surface-mu-47", "n": 2, "mu": 47, "Ln": 1, "LK": 0},
    {"name": "polarized-threefold", "n": 3, "mu": 2, "Ln": 2, "LK": 3},
]

THEOREMS = ["siu-jets", "jet-multiples", "matsusaka"]


def main() -> None:
    rows = compare(PROFILES, THEOREMS)
    print(f"| profile | {' | '.join(THEOREMS)} | minimal |")
    print("|---|" + "---|" * (len(THEOREMS) + 1))
    for row in rows:
        cells = []
        for theorem in THEOREMS:
            v = row["thresholds"][theorem]
            cells.append(str(v if v.denominator == 1 else float(v)))
        print(f"| {row['profile']} | {' | '.join(cells)} | {row['minimal']} |")
    print()
    print(json.dumps([{**r, "thresholds": value_to_json(r["thresholds"])} for r in rows], indent=2))


if __name__ == "__main__":
    main()
