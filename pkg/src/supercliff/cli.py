"""Command line entry point: ``verify --config cfg.json`` or ``verify --all``."""

import argparse
import sys

from .duality import DimensionCapError
from .harness import CHECKS, ConfigError, default_literals, dumps, exit_code, merge_reports, parse_config, run

ALL_DIMS = (2, 3, 4, 5, 6)
ALL_COUNT = 25


def build_parser():
    p = argparse.ArgumentParser(prog="verify", description="Exact verification of twisted duality for Clifford algebras.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="JSON run configuration")
    src.add_argument("--all", action="store_true", help="default suite over n = 2..6")
    p.add_argument("--dim", type=int, help="restrict --all to one ambient dimension")
    p.add_argument("--seed", type=int, default=0, help="seed for --all (default 0)")
    p.add_argument("--checks", help="comma separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.add_argument("--quiet", action="store_true", help="suppress the summary line on stderr")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    checks = args.checks.split(",") if args.checks else list(CHECKS)
    try:
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
            if args.checks:
                cfg.checks = parse_config({"dim": cfg.ambient_dim, "checks": checks}).checks
            report = run(cfg)
            target = args.report or cfg.output
        else:
            dims = [args.dim] if args.dim is not None else list(ALL_DIMS)
            reports = []
            for n in dims:
                cfg = parse_config({"dim": n, "checks": checks, "random": {"count": ALL_COUNT, "seed": args.seed}})
                cfg.subspaces = default_literals(n)
                cfg.tensor_pairing = "complement"
                reports.append(run(cfg))
            report = merge_reports(reports)
            target = args.report
    except (ConfigError, DimensionCapError) as exc:
        print("verify: %s" % exc, file=sys.stderr)
        return 2
    text = dumps(report)
    if target:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if not args.quiet:
        s = report["summary"]
        print("verify: %d records, %d failed (%.1fs)" % (s["total"], s["failed"], report["elapsed"]), file=sys.stderr)
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
