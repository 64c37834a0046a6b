"""Command-line front end"""

from .options import CliConfig, build_parser
from .commands import CommandRunner
from .repl import Repl
from .app import main

__all__ = ['CliConfig', 'build_parser', 'CommandRunner', 'Repl', 'main']
