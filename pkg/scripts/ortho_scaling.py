"""Orthonormality deviation and wall time as kappa_max grows."""

import argparse
import time

from spinorium.verify import orthonormality_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kappa-max", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32, 64])
    args = ap.parse_args()
    print(f"{'kappa_max':>9}  {'spinors':>7}  {'deviation':>10}  {'seconds':>7}")
    for k in args.kappa_max:
        t0 = time.perf_counter()
        dev = orthonormality_check(k)
        n = 2 * k * (k + 1)
        print(f"{k:>9}  {n:>7}  {dev:10.2e}  {time.perf_counter() - t0:7.2f}")


if __name__ == "__main__":
    main()
