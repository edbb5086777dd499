import argparse
import json
import logging
import sys

from pydantic import ValidationError

from . import __version__, config
from .commands import arg, register_all
from .errors import InvalidInputError, RepContainError
from .storage import dump_json

logger = logging.getLogger("repcontain")


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 through the shared handler, not argparse's exit 2
    def error(self, message):
        raise InvalidInputError(f"{self.prog}: {message}")


COMMON_ARGUMENTS = [
    arg("--threads", type=int, help="worker threads (default: CPU count; REPCONTAIN_THREADS overrides)"),
    arg("--log-level", help=f"stderr log level (default {config.LOG_LEVEL})"),
]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="repcontain",
        description="Containment of SU(n) representations: tensor powers, catalysts, characters and weight polytopes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_all(subparsers, COMMON_ARGUMENTS)
    return parser


def _configure_logging(level):
    logging.basicConfig(
        level=(level or config.LOG_LEVEL).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _exit_with(exc: RepContainError) -> int:
    print(json.dumps({"detail": exc.detail}), file=sys.stderr)
    return exc.exit_code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config.check_environment()
        try:
            _configure_logging(args.log_level)
        except ValueError:
            raise InvalidInputError(f"Unknown log level {args.log_level!r}")
        logger.info("Running %s", args.command)
        try:
            output = args.handler(args)
        except ValidationError as e:
            raise InvalidInputError(f"Invalid parameters: {e.errors()[0]['msg']}")
    except RepContainError as exc:
        return _exit_with(exc)

    print(dump_json(output))
    if getattr(output, "passed", True) is False:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
