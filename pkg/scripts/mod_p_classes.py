"""Partition admissible types into conjugacy classes modulo odd primes.

Over Z/p (p odd) two involutions are conjugate exactly when their +1
eigenspaces have equal dimension, i.e. when x + z agrees.

    python3 scripts/mod_p_classes.py --g 3 --primes 3 5 7
"""

import argparse

from ppav.levels import mod_p_classes


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--g", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7])
    args = ap.parse_args()

    for g in args.g:
        for p in args.primes:
            classes = mod_p_classes(g, p)
            body = "  ".join("{" + ", ".join(str(t) for t in c) + "}" for c in classes)
            print(f"g={g} p={p}: {len(classes)} classes  {body}")


if __name__ == "__main__":
    main()
