"""
clusterforge command line.

Usage:
    clusterforge trivial-ext a5_abc.json --format dot
    clusterforge knit a5_abc-tilde.json --out tilde.json
    clusterforge check gldim a3bar.json

Exit codes: 0 success, 1 failed verdict or cap exceeded, 2 input error.
"""

import argparse
import sys
import time
import uuid
from typing import Callable, Dict, List, Optional

from .core import config, log_activity, structured_logger
from .core.errors import (
    CapExceededError,
    ClusterForgeError,
    FieldError,
    InconsistentRelationError,
    InputError,
    UnknownVertexError,
)
from .tools import ExitCode, command_registry

INPUT_ERRORS = (InputError, FieldError, UnknownVertexError, InconsistentRelationError)


def _common(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("path", help="quiver file (JSON)")
    p.add_argument("--field", type=int, help="characteristic override: 0 or a prime")
    p.add_argument("--cap", type=int, help="cap of the main computation")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="write the artifact to this path")


def _levels(p: argparse.ArgumentParser) -> None:
    p.add_argument("--levels", nargs=2, type=int, metavar=("A", "B"))
    p.add_argument("--margin", type=int)


def _pushdown(p):
    _common(p)
    _levels(p)
    p.add_argument("--module", help="module file over the window")


def _surgery(p):
    _common(p)
    _levels(p)
    p.add_argument("--strip", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--compare-levels", dest="compare_levels", nargs=2, type=int, metavar=("A", "B"))


def _domain(p):
    _common(p)
    p.add_argument("--slice", required=True, help="slice file (JSON)")
    p.add_argument("--faithful", action="store_true", default=None, help="also check faithfulness")


def _check(p):
    p.add_argument("kind", choices=["gorenstein", "gldim"])
    _common(p)
    p.add_argument("--construct", choices=["none", "tilde", "bar"])
    p.add_argument("--vertices", nargs="+")


def _reproduce(p):
    p.add_argument("path", nargs="?", help="quiver file; default: the shipped example")
    p.add_argument("--levels", nargs=2, type=int, metavar=("A", "B"))
    p.add_argument("--strip", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--compare-levels", dest="compare_levels", nargs=2, type=int, metavar=("A", "B"))
    p.add_argument("--field", type=int)
    p.add_argument("--out", help="directory receiving the DOT files")


ARGUMENTS: Dict[str, Callable[[argparse.ArgumentParser], None]] = {
    "present": _common,
    "trivial-ext": _common,
    "cluster-rep": lambda p: (_common(p), _levels(p)),
    "repetitive": lambda p: (_common(p), _levels(p)),
    "duplicated": _common,
    "knit": _common,
    "pushdown": _pushdown,
    "quotient": lambda p: (_common(p), _levels(p)),
    "surgery": _surgery,
    "domain": _domain,
    "check": _check,
    "reproduce": _reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterforge", description=__doc__.strip().split("\n")[0])
    parser.add_argument("--version", action="version", version=f"clusterforge {config.version}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in command_registry.names():
        definition = command_registry.get(name)
        p = sub.add_parser(name, help=definition.description, description=definition.description)
        ARGUMENTS[name](p)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = vars(parser.parse_args(argv))
    except SystemExit as e:
        return ExitCode.OK if e.code == 0 else ExitCode.INPUT_ERROR

    error = config.validate()
    if error:
        print(f"Error: {error}", file=sys.stderr)
        return ExitCode.INPUT_ERROR

    name = args.pop("command")
    request_id = uuid.uuid4().hex[:8]
    start = time.time()
    log_activity(name, "start", details=args, request_id=request_id)

    def failed(code: ExitCode, message: str) -> int:
        duration = (time.time() - start) * 1000
        log_activity(name, "error", duration, error=message, request_id=request_id)
        print(f"Error: {message}", file=sys.stderr)
        return code

    try:
        result = command_registry.execute(name, args)
    except INPUT_ERRORS as e:
        return failed(ExitCode.INPUT_ERROR, str(e))
    except CapExceededError as e:
        return failed(ExitCode.VERDICT_FAILED, str(e))
    except ClusterForgeError as e:
        return failed(ExitCode.VERDICT_FAILED, str(e))

    if result.artifact is not None:
        sys.stdout.write(result.artifact)
    for path in result.written:
        print(f"wrote {path}", file=sys.stderr)
    duration = (time.time() - start) * 1000
    log_activity(name, "success", duration, details=result.report, request_id=request_id)
    if config.log_format == "json":
        structured_logger.info(f"{name} finished with exit code {int(result.exit_code)}", command=name)
    return int(result.exit_code)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
