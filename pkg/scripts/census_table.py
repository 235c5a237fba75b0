"""Tabulate 2-path neighbourhood sizes per class across dimensions.

Each cell shows the observed size of N(P) for that class; a trailing ``!``
marks disagreement with the closed-form table. The quad-bound slack is listed
underneath for the dimensions where that scan is affordable.

    python3 scripts/census_table.py --max-n 9 --workers 4
"""

import argparse

from augcube.neighborhood import census_path2, expected_size, verify_quad_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--quad-max", type=int, default=8, help="largest n for the quad scan (cap 9)")
    args = ap.parse_args()

    dims = list(range(args.min_n, args.max_n + 1))
    reports = {n: census_path2(n, workers=args.workers) for n in dims}
    keys = sorted({k for rep in reports.values() for k in rep.class_counts})
    width = max(len(k) for k in keys) + 2

    print(f"{'class':<{width}}" + "".join(f"{'n=' + str(n):>8}" for n in dims))
    for key in keys:
        row = []
        for n in dims:
            sizes = reports[n].class_sizes.get(key)
            if not sizes:
                row.append("")
                continue
            mark = "" if sizes == [expected_size(key, n)] else "!"
            row.append(",".join(map(str, sizes)) + mark)
        print(f"{key:<{width}}" + "".join(f"{c:>8}" for c in row))
    print(f"{'min':<{width}}" + "".join(f"{reports[n].min_observed:>8}" for n in dims))
    print(f"{'6n-17':<{width}}" + "".join(f"{6 * n - 17:>8}" for n in dims))

    print()
    print(f"{'n':>3} {'quad min':>9} {'8n-31':>6} {'sub min':>8} {'8n-29':>6}")
    for n in range(max(5, args.min_n), min(args.quad_max, 9) + 1):
        rep = verify_quad_bound(n, workers=args.workers)
        print(f"{n:>3} {rep.min_observed:>9} {8 * n - 31:>6} {rep.extras['xbar_n_min']:>8} {8 * n - 29:>6}")


if __name__ == "__main__":
    main()
