"""Exact h-extra connectivity of small augmented cubes.

Exhaustive search covers n <= 4 for both cut kinds; fragment search extends the
edge case as far as the timeout allows. Values reached before a timeout are
printed with a trailing ``<=`` (upper bound only).

    python3 scripts/explore_small.py --fragment-max 7 --timeout 120
"""

import argparse

from augcube.connectivity import extra_conn_exhaustive, extra_conn_fragment
from augcube.core import build


def fmt(value, exact=True):
    if value is None:
        return "-"
    return f"{value}" if exact else f"<={value}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fragment-max", type=int, default=6, help="largest n for fragment search")
    ap.add_argument("--timeout", type=float, default=60.0)
    ap.add_argument("--max-h", type=int, default=2)
    args = ap.parse_args()

    hs = range(args.max_h + 1)
    print(f"{'n':>3} {'method':<11}" + "".join(f"{'k_' + str(h):>7}{'l_' + str(h):>7}" for h in hs))
    for n in (2, 3, 4):
        g = build(n)
        cells = []
        for h in hs:
            cells.append(fmt(extra_conn_exhaustive(g, h, "vertex").value))
            cells.append(fmt(extra_conn_exhaustive(g, h, "edge").value))
        print(f"{n:>3} {'exhaustive':<11}" + "".join(f"{c:>7}" for c in cells))
    for n in range(5, args.fragment_max + 1):
        g = build(n)
        cells = []
        for h in hs:
            res = extra_conn_fragment(g, h, timeout=args.timeout)
            cells += ["", fmt(res.value, res.exact)]
        print(f"{n:>3} {'fragment':<11}" + "".join(f"{c:>7}" for c in cells))


if __name__ == "__main__":
    main()
