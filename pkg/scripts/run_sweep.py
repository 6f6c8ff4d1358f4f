"""Full relation sweep with a per-relation residual table.

    python scripts/run_sweep.py --kappa-max 6 --out sweep.json
"""

import argparse
import json
import time

from spinorium.cli import build_report
from spinorium.verify import PROFILES, SweepConfig, verify_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kappa-max", type=int, default=6)
    ap.add_argument("--radii", type=float, nargs="+", default=[0.5, 1.0, 2.0])
    ap.add_argument("--profiles", nargs="+", default=list(PROFILES))
    ap.add_argument("--tolerance", type=float, default=1e-10)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    config = SweepConfig(args.kappa_max, tuple(args.radii), tuple(args.profiles), args.tolerance, None, args.jobs)
    t0 = time.perf_counter()
    results = verify_all(config)
    report = build_report(config, results, time.perf_counter() - t0)

    print(f"{'id':>7}  {'cases':>6}  {'max residual':>12}")
    for row in report["summary"]:
        flag = "" if row["pass"] else "  <-- FAIL"
        print(f"{row['id']:>7}  {row['cases']:>6}  {row['max_residual']:12.3e}{flag}")
    t = report["totals"]
    print(f"\n{t['relations_passed']}/{t['relations']} relations, {t['cases']} cases, {report['wall_clock']:.1f} s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)


if __name__ == "__main__":
    main()
