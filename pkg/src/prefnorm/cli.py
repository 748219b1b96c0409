"""Command line front end for campaign execution and rank tables.

Exit codes: 0 on success, 1 on a configuration error, 2 on a runtime
failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import logging
import sys

from .harness import (SUITES, ConfigError, execute_campaign, load_config,
                      rank_from_results, write_results)
from .problems import problem_names

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefnorm",
        description="Preference-based optimization campaigns with "
                    "run-time normalization.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a campaign config")
    run.add_argument("--config", required=True, help="YAML or JSON config")
    run.add_argument("--out", default="results", help="output directory "
                     "(default: results)")
    run.add_argument("--workers", type=int, default=None,
                     help="parallel worker processes (default: config, then "
                          "PREFNORM_WORKERS, then 1)")
    run.add_argument("--seed", type=int, default=None,
                     help="override the config base seed")

    rank = sub.add_parser("rank", help="Friedman average ranks from a "
                                       "results directory")
    rank.add_argument("--in", dest="in_dir", required=True,
                      help="campaign output directory")
    rank.add_argument("--suite", required=True, choices=sorted(SUITES),
                      help="problem family to rank over")
    rank.add_argument("--checkpoint", type=int, required=True,
                      help="evaluation checkpoint to rank at")

    sub.add_parser("list-problems", help="print available problem names")

    validate = sub.add_parser("validate", help="check a config without "
                                               "running it")
    validate.add_argument("--config", required=True,
                          help="YAML or JSON config")
    return parser


def _cmd_run(args) -> int:
    config = load_config(args.config)
    if args.seed is not None:
        if args.seed < 0:
            raise ConfigError(f"seed: must be >= 0, got {args.seed}")
        config = dataclasses.replace(config, seed=args.seed)
    traces = execute_campaign(config, workers=args.workers)
    out = write_results(traces, config, args.out)
    print(f"wrote {len(traces)} runs to {out}")
    return 0


def _cmd_rank(args) -> int:
    ranks = rank_from_results(args.in_dir, args.suite, args.checkpoint)
    print("treatment,avg_rank")
    for treatment, avg in sorted(ranks.items(), key=lambda kv: kv[1]):
        print(f"{treatment},{avg!r}")
    return 0


def _cmd_validate(args) -> int:
    config = load_config(args.config)
    cells = (len(config.problems) * len(config.algorithms)
             * len(config.normalizations))
    print(f"ok: {cells} cells x {config.runs} runs, "
          f"{config.budget} evaluations each")
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "list-problems":
            for name in problem_names():
                print(name)
            return 0
        if args.command == "validate":
            return _cmd_validate(args)
        parser.error(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"config error:\n{exc}", file=sys.stderr)
        return 1
    except (ValueError, FileNotFoundError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
