"""Count second-order coevents that deny all four corners, across universes and schemes.

    python scripts/nagarjuna_sweep.py

Combinations whose scan would exceed a capacity limit are reported as such.
"""
from koti import CapacityExceeded, SchemeFilter, lift, make_space, nagarjuna_census


def main():
    print(f"{'n':>2} {'|A|':>3} {'universe':<15} {'scheme2':<15} {'outcomes':>8} {'count':>8}")
    for n in range(1, 5):
        base = make_space([chr(ord("a") + i) for i in range(n)])
        for k in range(1, n):
            a = base.event(base.outcomes[:k])
            for universe in SchemeFilter:
                try:
                    so = lift(base, universe)
                except CapacityExceeded:
                    continue
                for scheme2 in SchemeFilter:
                    try:
                        count = nagarjuna_census(so, a, scheme2)
                    except CapacityExceeded:
                        count = "cap"
                    print(f"{n:>2} {k:>3} {universe.value:<15} {scheme2.value:<15} {so.as_space.n:>8} {count:>8}")


if __name__ == "__main__":
    main()
