"""Negative control: flip single catalog terms and confirm the sweep notices.

Each mutated term is reported with the largest residual it produced. Use
--all to flip every term in the catalog instead of a random sample.
"""

import argparse
import time

from spinorium.relations import catalog
from spinorium.verify import MutationOutcome, SweepConfig, default_seed, mutation_control, verify_all


def flip_everything(config):
    out = []
    for entry in catalog():
        for i, term in enumerate(entry.terms):
            results = verify_all(config, [entry.with_term(i, term.flipped())])
            residuals = [r.residual for r in results if r.residual is not None]
            out.append(MutationOutcome(entry.id, i, max(residuals), sum(not r.passed for r in results), len(results)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", type=int, default=10, help="number of random terms")
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--kappa-max", type=int, default=6)
    ap.add_argument("--all", action="store_true")
    args = ap.parse_args()

    config = SweepConfig(kappa_max=args.kappa_max)
    t0 = time.perf_counter()
    if args.all:
        outcomes = flip_everything(config)
    else:
        seed = default_seed() if args.seed is None else args.seed
        outcomes = mutation_control(args.n, config, seed)
    for o in outcomes:
        mark = "caught" if o.detected() else "MISSED"
        print(f"{o.relation_id:>7} term {o.term_index}  {o.failures:>5}/{o.cases:<5} failing  max {o.max_residual:.3e}  {mark}")
    caught = sum(o.detected() for o in outcomes)
    print(f"\n{caught}/{len(outcomes)} mutations caught in {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
