"""Command line entry point.

    cilab run --suite table --n 4 --out report.json
    cilab classify subspace.json

Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
"""
import argparse
import json
import sys
from dataclasses import fields

from . import serialize as ser
from .catalog import ClassificationError, NotInvariantError, classify
from .curvature import CurvatureModel, is_curvature_invariant
from .suites import SUITES, RunConfig, report_csv, report_json, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _config(args):
    base = {}
    if args.config:
        try:
            base = ser.load_json(args.config)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(base, dict):
            raise ValueError("config file must hold a JSON object")
        known = {f.name for f in fields(RunConfig)}
        unknown = set(base) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
    for key in ("n", "sign", "seed", "suite", "budget", "format", "jobs"):
        val = getattr(args, key)
        if val is not None:
            base[key] = val
    if args.out is not None:
        base["output_path"] = args.out
    return RunConfig(**base)


def cmd_run(args):
    try:
        cfg = _config(args)
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suites(cfg)
    text = report_json(report) if cfg.format == "json" else report_csv(report)
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    s = report["summary"]
    print(f"{s['cases']} cases: " + ", ".join(f"{k} {v}" for k, v in s["counts"].items()), file=sys.stderr)
    return EXIT_OK if s["ok"] else EXIT_FAIL


def cmd_classify(args):
    try:
        W = ser.subspace_from_json(ser.load_json(args.file))
        m = CurvatureModel("grassmannian2", W.n, args.sign)
    except (OSError, json.JSONDecodeError, ser.SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    v = is_curvature_invariant(m, W)
    if not v:
        print(f"not curvature invariant (residual {v.residual:.3e})", file=sys.stderr)
        return EXIT_FAIL
    try:
        tag = classify(m, W)
    except NotInvariantError as exc:
        print(f"not curvature invariant (residual {exc.residual:.3e})", file=sys.stderr)
        return EXIT_FAIL
    except ClassificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(ser.dumps(ser.tag_to_json(tag)))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="cilab", description="curvature invariant subspace tools")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run verification suites and write a report")
    r.add_argument("--config", help="JSON file with RunConfig fields; flags override it")
    r.add_argument("--n", type=int)
    r.add_argument("--sign", type=int, choices=(1, -1))
    r.add_argument("--seed", type=int)
    r.add_argument("--suite", choices=SUITES + ("all",))
    r.add_argument("--budget", type=int, help="samples per forbidden pair")
    r.add_argument("--out", help="report path (default stdout)")
    r.add_argument("--format", choices=("json", "csv"))
    r.add_argument("--jobs", type=int)
    r.set_defaults(func=cmd_run)

    c = sub.add_parser("classify", help="print the type tag of a subspace given as JSON")
    c.add_argument("file")
    c.add_argument("--sign", type=int, default=1, choices=(1, -1))
    c.set_defaults(func=cmd_classify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
