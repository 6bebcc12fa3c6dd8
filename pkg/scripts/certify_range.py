"""Build connectivity certificates for a range of genera and tabulate them.

    python3 scripts/certify_range.py --gmin 3 --gmax 10 --out-dir certs/
"""

import argparse
import time
from pathlib import Path

from ppav import io
from ppav.strata import component_count_bound, connectivity_certificate, recheck_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--gmin", type=int, default=3)
    ap.add_argument("--gmax", type=int, default=10)
    ap.add_argument("--out-dir", type=Path, help="write certificate_g<N>.json files here")
    args = ap.parse_args()
    if args.out_dir:
        args.out_dir.mkdir(parents=True, exist_ok=True)

    print(f"{'g':>3} {'nodes':>6} {'bound':>6} {'edges':>6} {'connected':>10} {'recheck':>8} {'sec':>7}")
    for g in range(args.gmin, args.gmax + 1):
        t0 = time.perf_counter()
        cert = connectivity_certificate(g)
        problems = recheck_certificate(cert)
        dt = time.perf_counter() - t0
        print(f"{g:>3} {len(cert.nodes):>6} {component_count_bound(g):>6} {len(cert.edges):>6} "
              f"{str(cert.connected):>10} {'ok' if not problems else len(problems):>8} {dt:>7.2f}")
        if args.out_dir:
            (args.out_dir / f"certificate_g{g}.json").write_text(io.dumps(io.encode_certificate(cert)))


if __name__ == "__main__":
    main()
