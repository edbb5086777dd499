from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple


@dataclass
class Command:
    name: str
    help: str
    handler: Callable
    arguments: List[Tuple[tuple, Dict[str, Any]]] = field(default_factory=list)


def arg(*flags, **options):
    return flags, options


class CommandGroup:
    """Collects subcommands declared with @group.command(...)."""

    def __init__(self, tag: str):
        self.tag = tag
        self.commands: List[Command] = []

    def command(self, name: str, help: str, arguments=()):
        def decorator(fn):
            self.commands.append(Command(name, help, fn, list(arguments)))
            return fn
        return decorator

    def register(self, subparsers, common_arguments=()):
        for cmd in self.commands:
            parser = subparsers.add_parser(cmd.name, help=cmd.help, description=cmd.help)
            for flags, options in list(cmd.arguments) + list(common_arguments):
                parser.add_argument(*flags, **options)
            parser.set_defaults(handler=cmd.handler, group=self.tag)


# Shared input flags
RHO = arg("--rho", required=True, metavar="PATH", help="JSON file with the representation rho")
SIGMA = arg("--sigma", required=True, metavar="PATH", help="JSON file with the representation sigma")


def all_groups() -> List[CommandGroup]:
    from .analysis import group as analysis_group
    from .evaluation import group as evaluation_group
    from .selftest import group as selftest_group
    from .su2 import group as su2_group

    return [analysis_group, evaluation_group, su2_group, selftest_group]


def register_all(subparsers, common_arguments=()):
    for group in all_groups():
        group.register(subparsers, common_arguments)


__all__ = ["Command", "CommandGroup", "arg", "register_all", "RHO", "SIGMA"]
