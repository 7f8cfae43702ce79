"""Corner census for every space size up to the dense cap, every scheme and every event size.

    python scripts/census_table.py [--max-n 4] [--jobs 1]

Writes CSV to stdout. Counts depend on the event only through its size, so one
event per size is enough.
"""
import argparse
import csv
import sys

from koti import SchemeFilter, census, make_space
from koti.coevent import dense_cap
from koti.report import CENSUS_COLUMNS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=dense_cap())
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(("event_size", *CENSUS_COLUMNS))
    for n in range(1, args.max_n + 1):
        space = make_space([chr(ord("a") + i) for i in range(n)])
        for k in range(n + 1):
            a = space.event(space.outcomes[:k])
            for scheme in SchemeFilter:
                rep = census(space, a, scheme, jobs=args.jobs)
                w.writerow((k, n, a.mask, scheme.value, *rep.counts, rep.total))


if __name__ == "__main__":
    main()
