"""Recompute the five reference tables and print them next to the published numbers.

    python3 scripts/reproduce_tables.py            # all tables
    python3 scripts/reproduce_tables.py 3 5        # a subset
"""

import argparse
import time

from airyquad.tables import TABLES


def fmt(v):
    if isinstance(v, float):
        return f"{v:.6e}" if v != 0 and (abs(v) < 1e-3 or abs(v) >= 1e4) else f"{v:.6g}"
    return str(v)


def show(table_id):
    t0 = time.perf_counter()
    rows = TABLES[table_id]()
    elapsed = time.perf_counter() - t0
    header = list(rows[0])
    cells = [[fmt(r[k]) for k in header] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    print(f"\nTable {table_id}  ({elapsed:.2f} s)")
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for c in cells:
        print("  ".join(x.rjust(w) for x, w in zip(c, widths)))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("ids", nargs="*", type=int, default=sorted(TABLES))
    for table_id in p.parse_args().ids:
        show(table_id)


if __name__ == "__main__":
    main()
