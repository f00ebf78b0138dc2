"""Write every contour kind to CSV for plotting.

    python3 scripts/export_contours.py --out-dir contours/
"""

import argparse
import csv
from pathlib import Path

from airyquad.contours import KINDS, export

# one representative parameter per kind
DEFAULTS = {"eta-pos": 2.0, "eta-zero": 0.0, "eta-neg": -2.0, "bessel-mono": 0.9, "bessel-osc": 1.5, "shifted": 1.0}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", type=Path, default=Path("contours"))
    p.add_argument("--samples", type=int, default=400)
    args = p.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for kind in KINDS:
        header, rows = export(kind, DEFAULTS[kind], args.samples)
        path = args.out_dir / f"{kind}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows([f"{v:.17g}" for v in r] for r in rows)
        print(f"{path}: {len(rows)} points")


if __name__ == "__main__":
    main()
