"""
Command line entry point: solve, oracle and verify subcommands.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config import RunConfig, VerifyConfig, configure_logging, load_settings
from orchestrator import EXIT_USAGE, ConnectivityOrchestrator

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share exit status 1 with parse errors
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    settings = load_settings()
    parser = _Parser(prog="kapc", description="k-bounded all-pairs edge / vertex connectivity")
    parser.add_argument("--log-level", default=settings.log_level, help="logging level (stderr)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_run_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=["edge", "vertex"], default="edge")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--input", default=None, help="edge-list file (default stdin)")
        p.add_argument("--output", default=None, help="output file (default stdout)")

    solve = sub.add_parser("solve", help="algebraic k-APC / k-APVC")
    add_run_args(solve)
    solve.add_argument("--seed", type=int, default=settings.seed)
    solve.add_argument("--prime", type=int, default=settings.prime)
    solve.add_argument("--trials", type=int, default=settings.trials)
    solve.add_argument("--max-retries", type=int, default=settings.max_retries)

    oracle = sub.add_parser("oracle", help="max-flow ground truth")
    add_run_args(oracle)

    verify = sub.add_parser("verify", help="compare solver and oracle on random instances")
    verify.add_argument("--mode", choices=["edge", "vertex"], default="edge")
    verify.add_argument("--instances", type=int, default=200)
    verify.add_argument("--min-n", type=int, default=2)
    verify.add_argument("--max-n", type=int, default=8)
    verify.add_argument("--max-m", type=int, default=20)
    verify.add_argument("--max-k", type=int, default=4)
    verify.add_argument("--seed", type=int, default=settings.seed)
    verify.add_argument("--prime", type=int, default=settings.prime)
    verify.add_argument("--trials", type=int, default=settings.trials)
    verify.add_argument("--max-retries", type=int, default=settings.max_retries)
    verify.add_argument("--threshold", type=float, default=settings.verify_threshold)
    verify.add_argument("--fault-inject", action="store_true", help=argparse.SUPPRESS)
    verify.add_argument("--output", default=None)
    return parser


def _read_input(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE

    configure_logging(args.log_level)
    orchestrator = ConnectivityOrchestrator()

    try:
        if args.command == "verify":
            config = VerifyConfig(
                mode=args.mode,
                instances=args.instances,
                min_n=args.min_n,
                max_n=args.max_n,
                max_m=args.max_m,
                max_k=args.max_k,
                seed=args.seed,
                prime=args.prime,
                trials=args.trials,
                max_retries=args.max_retries,
                threshold=args.threshold,
                fault_inject=args.fault_inject,
            )
            result = orchestrator.run_verify(config)
        else:
            if args.command == "oracle":
                config = RunConfig(mode=f"oracle-{args.mode}", k=args.k)
            else:
                config = RunConfig(
                    mode=args.mode,
                    k=args.k,
                    seed=args.seed,
                    prime=args.prime,
                    trials=args.trials,
                    max_retries=args.max_retries,
                    input_path=args.input,
                    output_path=args.output,
                )
            text = _read_input(args.input)
            result = orchestrator.run_solve(config, text)
    except ValidationError as e:
        sys.stderr.write(f"invalid configuration: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE

    if "output" in result:
        _write_output(args.output, result["output"])
    if not result["success"] and result.get("error"):
        sys.stderr.write(f"error: {result['error']}\n")
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
