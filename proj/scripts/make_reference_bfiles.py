#!/usr/bin/env python3
"""Regenerate the bundled reference b-files under data/.

Each sequence is produced from its textbook recurrence and initial values,
independently of the C++ library, so the files can serve as an external
regression reference. Run from the repository root:

    python3 scripts/make_reference_bfiles.py
"""

import os

TERMS = 61  # indices 0..60


def by_recurrence(initial, step, count=TERMS):
    vals = list(initial)
    while len(vals) < count:
        vals.append(step(vals))
    return vals


SEQUENCES = {
    # OEIS id, file name, terms
    "fibonacci": ("A000045", by_recurrence([0, 1], lambda v: v[-1] + v[-2])),
    "lucas": ("A000032", by_recurrence([2, 1], lambda v: v[-1] + v[-2])),
    "pell": ("A000129", by_recurrence([0, 1], lambda v: 2 * v[-1] + v[-2])),
    "jacobsthal": ("A001045", by_recurrence([0, 1], lambda v: v[-1] + 2 * v[-2])),
    "padovan": ("A000931", by_recurrence([1, 0, 0], lambda v: v[-2] + v[-3])),
    "narayana": ("A000930", by_recurrence([1, 1, 1], lambda v: v[-1] + v[-3])),
    "a003269": ("A003269", by_recurrence([0, 1, 1, 1, 1], lambda v: v[-1] + v[-4])),
}


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    data = os.path.join(root, "data")
    os.makedirs(data, exist_ok=True)
    for name, (oeis, vals) in SEQUENCES.items():
        path = os.path.join(data, name + ".txt")
        with open(path, "w") as fh:
            fh.write(f"# {oeis} reference values, generated by scripts/make_reference_bfiles.py\n")
            for idx, val in enumerate(vals):
                fh.write(f"{idx} {val}\n")
        print(f"wrote {path} ({len(vals)} terms)")


if __name__ == "__main__":
    main()
