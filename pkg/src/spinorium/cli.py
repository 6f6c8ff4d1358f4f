"""spinorium command line: eval, verify, catalog, ortho.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from contextlib import contextmanager
from dataclasses import asdict

from . import __version__
from .indices import HalfInt, InvalidIndexError, SpinorIndex
from .relations import catalog
from .spinors import eval_spinor
from .verify import PROFILES, SweepConfig, orthonormality_check, summarize, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
REPORT_SCHEMA = "spinorium/report/v1"
CATALOG_SCHEMA = "spinorium/catalog/v1"
ORTHO_TOLERANCE = 1e-12
CSV_COLUMNS = ("relation_id", "variant", "kappa", "mu_times_2", "profile", "r", "residual", "pass")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None
    with fh:
        yield fh


def _csv_list(text: str, conv=str) -> list:
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError(f"empty list {text!r}")
    try:
        return [conv(t) for t in items]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- eval ------------------------------------------------------------------------


def cmd_eval(args) -> int:
    try:
        idx = SpinorIndex(args.kappa, HalfInt.parse(args.mu))
    except InvalidIndexError as exc:
        raise UsageError(str(exc)) from None
    value = eval_spinor(idx, args.theta, args.phi)
    if args.json:
        doc = {
            "kappa": idx.kappa,
            "mu": str(idx.mu),
            "theta": args.theta,
            "phi": args.phi,
            "up": [value.up.real, value.up.imag],
            "down": [value.down.real, value.down.imag],
        }
        print(json.dumps(doc))
    else:
        print(f"up    {_fmt(value.up)}")
        print(f"down  {_fmt(value.down)}")
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def _result_row(res) -> dict:
    return {
        "relation_id": res.relation_id,
        "variant": res.variant or "",
        "kappa": res.kappa,
        "mu_times_2": res.mu.twice,
        "profile": res.radial_profile,
        "r": res.r,
        "residual": res.residual,
        "pass": res.passed,
    }


def build_report(config: SweepConfig, results, wall_clock: float) -> dict:
    summary = summarize(results)
    config_doc = asdict(config)
    config_doc["radii"] = list(config.radii)
    config_doc["profiles"] = list(config.profiles)
    return {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "config": config_doc,
        "summary": [
            {
                "id": row.relation_id,
                "cases": row.cases,
                "failures": row.failures,
                "inapplicable": row.inapplicable,
                "max_residual": row.max_residual,
                "pass": row.passed,
            }
            for row in summary
        ],
        "failures": [dict(_result_row(r), status=r.status) for r in results if not r.passed],
        "totals": {
            "relations": len(summary),
            "relations_passed": sum(row.passed for row in summary),
            "cases": len(results),
            "failures": sum(not r.passed for r in results),
        },
        "wall_clock": wall_clock,
    }


def cmd_verify(args) -> int:
    known = [e.id for e in catalog()]
    relations = None
    if args.relations:
        relations = tuple(_csv_list(args.relations))
        unknown = [r for r in relations if r not in known]
        if unknown:
            raise UsageError(f"unknown relation ids {', '.join(unknown)}; valid ids: {', '.join(known)}")
    radii = tuple(_csv_list(args.radii, float)) if args.radii else SweepConfig.radii
    profiles = tuple(_csv_list(args.profile)) if args.profile else SweepConfig.profiles
    try:
        config = SweepConfig(
            kappa_max=args.kappa_max,
            radii=radii,
            profiles=profiles,
            tolerance=args.tolerance,
            relations=relations,
            jobs=args.jobs or os.cpu_count() or 1,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    t0 = time.perf_counter()
    results = verify_all(config)
    wall = time.perf_counter() - t0
    report = build_report(config, results, wall)

    if args.json:
        with _open_out(args.json) as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if args.csv:
        with _open_out(args.csv) as fh:
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
            for res in results:
                row = _result_row(res)
                row["residual"] = "" if res.residual is None else repr(res.residual)
                row["pass"] = "true" if res.passed else "false"
                writer.writerow(row)

    totals = report["totals"]
    worst = max((row["max_residual"] for row in report["summary"]), default=0.0)
    out = sys.stderr if "-" in (args.json, args.csv) else sys.stdout
    for fail in report["failures"][:20]:
        mu = HalfInt(fail["mu_times_2"])
        res = "n/a" if fail["residual"] is None else f"{fail['residual']:.3e}"
        print(
            f"FAIL {fail['relation_id']}{fail['variant']} kappa={fail['kappa']} mu={mu} "
            f"{fail['profile']} r={fail['r']:g} residual={res} ({fail['status']})",
            file=out,
        )
    if totals["failures"] > 20:
        print(f"... {totals['failures'] - 20} more failures", file=out)
    print(
        f"{totals['relations_passed']}/{totals['relations']} relations pass, "
        f"{totals['cases'] - totals['failures']}/{totals['cases']} cases, "
        f"max residual {worst:.3e}, {wall:.1f} s",
        file=out,
    )
    return EXIT_OK if totals["failures"] == 0 else EXIT_FAIL


# -- catalog ---------------------------------------------------------------------


def _target_text(term) -> str:
    mu = {"0": "mu", "s": "mu+s"}[term.mu_shift]
    return f"({term.kappa_map}, {mu})"


def catalog_document() -> dict:
    entries = []
    for e in catalog():
        entries.append(
            {
                "id": e.id,
                "kind": e.kind,
                "lhs": e.lhs_template,
                "variants": [v for v in e.variants if v is not None],
                "terms": [
                    {
                        "target": _target_text(t),
                        "coefficient_form": t.form(),
                        "radial_op": t.radial.describe(),
                    }
                    for t in e.terms
                ],
            }
        )
    return {"schema": CATALOG_SCHEMA, "entries": entries}


def catalog_markdown() -> str:
    buf = io.StringIO()
    buf.write("| id | kind | lhs | variants | terms |\n|---|---|---|---|---|\n")
    for e in catalog():
        variants = "+/-" if e.is_paired else ""
        buf.write(f"| {e.id} | {e.kind} | `{e.lhs_template}` | {variants} | {len(e.terms)} |\n")
    return buf.getvalue()


def cmd_catalog(args) -> int:
    if args.json:
        with _open_out(args.json) as fh:
            json.dump(catalog_document(), fh, indent=2)
            fh.write("\n")
    if args.markdown:
        with _open_out(args.markdown) as fh:
            fh.write(catalog_markdown())
    return EXIT_OK


# -- ortho -----------------------------------------------------------------------


def cmd_ortho(args) -> int:
    if args.kappa_max < 1:
        raise UsageError("kappa-max must be >= 1")
    dev = orthonormality_check(args.kappa_max)
    print(f"max deviation {dev:.1e}")
    return EXIT_OK if dev < ORTHO_TOLERANCE else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinorium", description="Spherical spinors and their relation catalog.")
    parser.add_argument("--version", action="version", version=f"spinorium {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate Omega_{kappa mu} at one direction")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--mu", required=True, help="half-integer, e.g. 0.5, -3/2")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="sweep the relation catalog")
    p.add_argument("--kappa-max", type=int, default=SweepConfig.kappa_max)
    p.add_argument("--relations", help="comma-separated relation ids (default: all)")
    p.add_argument("--tolerance", type=float, default=SweepConfig.tolerance)
    p.add_argument("--radii", help="comma-separated radii")
    p.add_argument("--profile", help=f"comma-separated radial profiles from {', '.join(PROFILES)}")
    p.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    p.add_argument("--csv", metavar="PATH", help="write per-case rows as CSV ('-' for stdout)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="export the relation catalog")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--json", metavar="PATH")
    group.add_argument("--markdown", metavar="PATH")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("ortho", help="quadrature orthonormality of the spinor basis")
    p.add_argument("--kappa-max", type=int, default=6)
    p.set_defaults(func=cmd_ortho)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spinorium: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
