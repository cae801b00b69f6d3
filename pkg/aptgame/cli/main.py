"""
Command-line entry point.

Exit codes: 0 success, 1 verification negative, 2 input error.
"""

import argparse
import logging
import sys
from typing import Dict, Optional, Sequence

from ..__version__ import __version__
from ..errors import AptGameError, ErrorHandler
from ..utils.config import KEY_TYPES, load_config_file, merge_config
from ..utils.logging import configure_logging, get_logger
from .commands import COMMANDS
from .output import emit
from .reproduce import TARGETS, cmd_reproduce

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NOT_EQUILIBRIUM = 1
EXIT_INPUT_ERROR = 2

COMMAND_DEFAULTS: Dict[str, Dict[str, object]] = {
    "trajectory": {"gamma": 0.0},
    "sweep-qi": {"qi": 0.1},
}

HELP = {
    "solve": "classify all Nash equilibria; ratios given to two decimals, as in the"
             " published configurations, need --ratio-tol 0.02",
    "verify": "check a profile by grid deviations and best responses",
    "costs": "closed-form and finite-horizon costs of a profile",
    "trajectory": "sample the compromised-resource state",
    "best-response": "best responses of all three players",
    "sweep-qi": "classify along the insider risk-coefficient series",
    "compare": "malicious versus inadvertent insider equilibria",
    "reproduce": "regenerate published tables and figure data",
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="flat key = value config file")
    parser.add_argument("--format", choices=("csv", "json"), default=None)
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--scenario", choices=("A", "B", "C", "D"), default=None)
    for key in ("pa", "qa", "pd", "qd", "pi", "qi", "qa-inadvertent",
                "alpha", "beta", "gamma", "at-beta",
                "grid-step", "gamma-step", "slack", "tol", "ratio-tol", "horizon", "t-end"):
        parser.add_argument(f"--{key}", type=str, default=None, metavar="X")
    for key in ("n-steps", "points", "samples", "workers"):
        parser.add_argument(f"--{key}", type=str, default=None, metavar="N")
    parser.add_argument("--knowledge", choices=("known", "unknown"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aptgame",
        description="Three-player APT game with malicious or inadvertent insiders",
    )
    parser.add_argument("--version", action="version", version=f"aptgame {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in COMMANDS:
        _add_common(sub.add_parser(name, help=HELP[name], description=HELP[name]))
    reproduce = sub.add_parser("reproduce", help=HELP["reproduce"])
    reproduce.add_argument("target", choices=sorted(TARGETS))
    _add_common(reproduce)
    return parser


def _flag_values(args: argparse.Namespace) -> Dict[str, object]:
    values = {}
    for key in KEY_TYPES:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            values[key] = value
    return values


def run(args: argparse.Namespace, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    file_values = load_config_file(args.config) if args.config else {}
    config = merge_config(file_values, _flag_values(args),
                          config_source=args.config or "<config>",
                          command_defaults=COMMAND_DEFAULTS.get(args.command))
    logger.debug("running %s with %d flag value(s)", args.command, len(_flag_values(args)))
    if args.command == "reproduce":
        output = cmd_reproduce(args.target, config)
        emit(output, config.output_format, stdout, config.out, out_is_dir=True)
    else:
        output = COMMANDS[args.command](config)
        emit(output, config.output_format, stdout, config.out)
    return output.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT_ERROR

    configure_logging(logging.DEBUG if args.verbose else logging.WARNING)
    handler = ErrorHandler(show_traceback=args.verbose)
    try:
        return run(args)
    except AptGameError as err:
        handler.error(err)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        handler.error(AptGameError(f"cannot write output: {exc}").with_inner_exception(exc))
        return EXIT_INPUT_ERROR
