"""
Command-line options

Flags are layered over Config: anything not given on the command line
falls back to the LAMBDALIN_* environment and lambdalin.json.
"""

import argparse
from dataclasses import dataclass
from typing import List, Optional

from ..config import Config
from ..exceptions import ConfigurationException

SUBCOMMANDS = ('normalize', 'trace', 'repl', 'check', 'parse')
INPUT_COMMANDS = ('normalize', 'trace', 'parse')
FORMATS = ('text', 'machine')


@dataclass
class CliConfig:
    subcommand: str
    expression: Optional[str] = None
    file: Optional[str] = None
    fuel: int = 10_000
    seed: int = 0
    samples: int = 1_000
    output_format: str = 'text'
    prelude: bool = True
    prelude_names: bool = True
    prelude_path: Optional[str] = None
    unrestricted_factorization: bool = False

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigurationException(f"Unknown subcommand: {self.subcommand}. "
                                         f"Available: {list(SUBCOMMANDS)}")
        if self.fuel < 0:
            raise ConfigurationException(f"Fuel must be non-negative, got {self.fuel}",
                                         config_key='fuel')
        if self.samples < 0:
            raise ConfigurationException(f"Sample count must be non-negative, got {self.samples}",
                                         config_key='samples')
        if self.output_format not in FORMATS:
            raise ConfigurationException(f"Unknown format: {self.output_format}",
                                         config_key='format')
        sources = [source for source in (self.expression, self.file) if source is not None]
        if self.subcommand in INPUT_COMMANDS and len(sources) != 1:
            raise ConfigurationException(f"{self.subcommand} needs exactly one of -e EXPR or -f FILE")
        if self.subcommand not in INPUT_COMMANDS and sources:
            raise ConfigurationException(f"{self.subcommand} takes no -e/-f input")

    @property
    def machine(self) -> bool:
        return self.output_format == 'machine'

    @property
    def seeds(self) -> List[int]:
        """Strategy seeds for confluence sampling, derived from the master seed"""
        return [self.seed + offset for offset in range(3)]

    @classmethod
    def from_args(cls, args: argparse.Namespace, config: Optional[Config] = None) -> "CliConfig":
        config = config or Config()
        samples = getattr(args, 'samples', None)
        return cls(
            subcommand=args.command,
            expression=getattr(args, 'expression', None),
            file=getattr(args, 'file', None),
            fuel=args.fuel if args.fuel is not None else config.fuel,
            seed=args.seed if args.seed is not None else config.seed,
            samples=samples if samples is not None else config.samples,
            output_format=args.format,
            prelude=not args.no_prelude,
            prelude_names=not args.no_prelude_names,
            prelude_path=config.prelude_path,
            unrestricted_factorization=getattr(args, 'unrestricted_factorization', False),
        )


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting with argparse's status 2"""

    def error(self, message: str):
        raise ConfigurationException(f"{self.prog}: {message}")


def _common(parser: argparse.ArgumentParser):
    parser.add_argument('--fuel', type=int, default=None, help="Step budget (default 10000)")
    parser.add_argument('--seed', type=int, default=None, help="Master seed (default 0)")
    parser.add_argument('--format', choices=FORMATS, default='text',
                        help="text for people, machine for one JSON record per line")
    parser.add_argument('--no-prelude', action='store_true', help="Do not load the prelude")
    parser.add_argument('--no-prelude-names', action='store_true',
                        help="Print terms without folding them back to prelude names")


def _input(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('-e', dest='expression', metavar='EXPR', help="Inline program")
    source.add_argument('-f', dest='file', metavar='FILE', help="Program file (.lal)")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog='lambdalin',
        description="Linear-algebraic lambda-calculus: normalise, trace and check terms",
    )
    sub = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    for name, help_text in (('normalize', "Print the normal form"),
                            ('trace', "Print every rewrite step"),
                            ('parse', "Check syntax and print the canonical form")):
        command = sub.add_parser(name, help=help_text)
        _input(command)
        _common(command)

    repl = sub.add_parser('repl', help="Interactive session")
    _common(repl)

    check = sub.add_parser('check', help="Run the property suites")
    _common(check)
    check.add_argument('--samples', type=int, default=None,
                       help="Generated terms for confluence sampling (0 skips it)")
    check.add_argument('--unrestricted-factorization', action='store_true',
                       help=argparse.SUPPRESS)
    return parser
