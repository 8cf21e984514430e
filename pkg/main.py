#!/usr/bin/env python3
"""
ordmatch - command-line entry point
"""

import argparse
import sys
from typing import List, Optional

from rich.console import Console

from cli import EXIT_BUDGET, EXIT_USAGE, run_command
from config import Settings, configure_logging
from errors import BudgetExceeded, OrderedMatchingError, UsageError
from help_system import HelpSystem
from utils import error_message


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors map to exit code 4"""

    def error(self, message):
        raise UsageError(message)


def _common_flags() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input JSON file (default: stdin)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--threads", type=int, help="worker processes")
    common.add_argument("--budget", type=int, help="search node budget")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    return common


def build_parser() -> ArgumentParser:
    """Build the argument parser with one subcommand per operation"""
    common = _common_flags()
    parser = ArgumentParser(prog="ordmatch", description="Extremal numbers of ordered matchings")
    sub = parser.add_subparsers(dest="command")

    detect = sub.add_parser("detect", parents=[common], help="find patterns in a graph")
    detect.add_argument("--kind", help="pattern kind, e.g. nonnest")
    detect.add_argument("--all", action="store_true", help="report every kind")
    detect.add_argument("--path", action="store_true", help="longest alternating path")
    detect.add_argument("--oracle", type=int, metavar="TRIALS",
                        help="cross-check detectors against brute force on random graphs")
    detect.add_argument("--max-n", type=int, default=9, help="largest random graph for --oracle")

    turan = sub.add_parser("turan", parents=[common], help="exact extremal number by search")
    turan.add_argument("--forbid", required=True, help="forbidden set, e.g. nonsep:3 or cross:2,sep:2")
    turan.add_argument("-n", type=int, required=True, help="vertex count")
    turan.add_argument("--shift-prune", action="store_true", help="closure-closed graphs only (nonsep)")
    turan.add_argument("--archive", action="store_true", help="save the report under the data directory")

    for name, text in (("construct", "build a construction"), ("verify", "re-check a construction")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--family", required=True, help="construction family")
        p.add_argument("-n", type=int, required=True, help="vertex count")
        p.add_argument("-k", type=int, required=True, help="matching size")
        p.add_argument("--word", help="letters over {1, 2} for apex_chain")
        if name == "construct":
            p.add_argument("--archive", action="store_true", help="save the construction under the data directory")

    ramsey = sub.add_parser("ramsey", parents=[common], help="ordered Ramsey number by search")
    ramsey.add_argument("--target", required=True, help="altpath:t or nonnest:k")
    ramsey.add_argument("--nmax", type=int, required=True, help="largest n to try")

    table = sub.add_parser("table", parents=[common], help="closed forms against search")
    table.add_argument("--max-n", type=int, default=8)
    table.add_argument("--max-k", type=int, default=3)

    render = sub.add_parser("render", parents=[common], help="draw a graph")
    render.add_argument("--format", choices=("svg", "dot"), default="svg")

    stored = sub.add_parser("archive", parents=[common], help="list or show archived artifacts")
    stored.add_argument("category", nargs="?", help="ramsey, turan or constructions")
    stored.add_argument("name", nargs="?", help="artifact to print")

    help_cmd = sub.add_parser("help", parents=[common], help="show help")
    help_cmd.add_argument("topic", nargs="?", help="command to explain")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line, run the command and return its exit code"""
    console = Console()
    errors = Console(stderr=True)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            HelpSystem(console).show_help()
            return EXIT_USAGE
        settings = Settings.from_env().override(budget=args.budget, threads=args.threads, seed=args.seed)
        level = {0: None, 1: "INFO"}.get(args.verbose, "DEBUG")
        configure_logging(level or settings.log_level)
        return run_command(args, settings, console)
    except UsageError as e:
        errors.print(f"[red]{error_message(e)}[/red]")
        return EXIT_USAGE
    except BudgetExceeded as e:
        errors.print(f"[yellow]{error_message(e)}[/yellow]")
        return EXIT_BUDGET
    except OrderedMatchingError as e:
        errors.print(f"[red]{error_message(e)}[/red]")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
