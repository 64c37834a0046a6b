"""
Entry point: lambdalin <command> [options]

Exit codes: 0 success, 1 parse or usage error, 2 fuel exhausted,
3 property check failure.
"""

import sys
from typing import List, Optional, TextIO

from .commands import CommandRunner
from .options import CliConfig, build_parser
from ..config import Config
from ..exceptions import ConfigurationException, ParseError
from ..logger import setup_logger
from ..parser import describe_span
from ..utils import EXIT_OK, EXIT_USAGE, ErrorHandler


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    err = err or sys.stderr
    try:
        config = Config()
    except ConfigurationException as e:
        print(f"error: {e.message}", file=err)
        return EXIT_USAGE

    logger = setup_logger('lambdalin', config.log_level, config.log_file)
    handler = ErrorHandler(logger)
    runner = None
    try:
        args = build_parser().parse_args(argv)
        cfg = CliConfig.from_args(args, config)
        runner = CommandRunner(cfg, out, config)
        return runner.dispatch()
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except Exception as e:
        print(f"error: {e}", file=err)
        if isinstance(e, ParseError) and runner is not None and runner.source is not None:
            print(describe_span(runner.source, e.span), file=err)
        return handler.handle_error(e, {'argv': argv})
