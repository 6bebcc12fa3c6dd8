"""Odd genus: the block witness, its involution types and the group they generate.

    python3 scripts/master_group_orders.py --gmax 9
"""

import argparse

from ppav.strata import admissible_triples, odd_g_master_witness
from ppav.symplectic import group_closure


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--gmax", type=int, default=9)
    ap.add_argument("--cap", type=int, default=100_000)
    ap.add_argument("--verbose", action="store_true", help="list the types found")
    args = ap.parse_args()

    print(f"{'g':>3} {'types':>6} {'admissible':>11} {'order':>7} {'(g+1)(g+3)/4':>13}")
    for g in range(3, args.gmax + 1, 2):
        _, found = odd_g_master_witness(g)
        order = len(group_closure([inv.matrix for inv in found.values()], args.cap))
        print(f"{g:>3} {len(found):>6} {len(admissible_triples(g)):>11} {order:>7} {(g + 1) * (g + 3) // 4:>13}")
        if args.verbose:
            print("    " + " ".join(str(t) for t in found))


if __name__ == "__main__":
    main()
