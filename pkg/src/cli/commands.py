"""
Subcommand implementations

Results go to `out`, one line per record in machine format; diagnostics
go through logging to stderr.
"""

import json
import sys
from typing import Dict, Optional, TextIO

from .options import CliConfig
from ..config import Config
from ..exceptions import ParseError
from ..harness import GenConfig, run_checks
from ..logger import get_logger
from ..parser import Program, parse_program, print_term
from ..rewrite import NormalizeOutcome, RewriteSystem, normalize, trace
from ..stdlib import Prelude, load_prelude
from ..terms import Term
from ..utils import EXIT_FUEL_EXHAUSTED, EXIT_OK

logger = get_logger('cli')


def outcome_line(outcome: NormalizeOutcome, show) -> str:
    if outcome.is_normal:
        return f"{outcome.status.value}\t{show(outcome.term)}"
    return f"FUEL EXHAUSTED after {outcome.steps} steps\t{show(outcome.term)}"


def select_main(program: Program) -> Term:
    """The trailing term, else the last binding"""
    if program.main is not None:
        return program.main
    if program.bindings:
        return program.bindings[-1][1]
    raise ParseError("Input contains no term")


class CommandRunner:
    """Runs one subcommand against the prelude chosen by the options"""

    def __init__(self, cfg: CliConfig, out: Optional[TextIO] = None,
                 config: Optional[Config] = None):
        self.cfg = cfg
        self.out = out or sys.stdout
        self.config = config
        self.system = RewriteSystem(unrestricted_factorization=cfg.unrestricted_factorization)
        self.prelude = load_prelude(cfg.prelude_path) if cfg.prelude else Prelude.empty()
        self.names: Dict[str, Term] = self.prelude.as_dict()
        self.source: Optional[str] = None

    def emit(self, line: str):
        print(line, file=self.out)

    def show(self, t: Term) -> str:
        return print_term(t, self.names if self.cfg.prelude_names else None)

    # ------------------------------------------------------------------
    # Input
    # ------------------------------------------------------------------
    def read_source(self) -> str:
        if self.cfg.expression is not None:
            self.source = self.cfg.expression
        else:
            with open(self.cfg.file, 'r', encoding='utf-8') as f:
                self.source = f.read()
        return self.source

    def load_input(self) -> Term:
        source = self.read_source()
        program = parse_program(source, bindings=self.prelude.as_dict(), lenient=True)
        self.names.update(program.as_dict())
        term = select_main(program)
        logger.debug(f"Input parsed: {len(program)} binding(s)")
        return term

    # ------------------------------------------------------------------
    # Subcommands
    # ------------------------------------------------------------------
    def cmd_parse(self) -> int:
        term = self.load_input()
        if self.cfg.machine:
            self.emit(json.dumps({'term': self.show(term)}))
        else:
            self.emit(self.show(term))
        return EXIT_OK

    def cmd_normalize(self) -> int:
        term = self.load_input()
        outcome = normalize(term, self.cfg.fuel, self.system)
        if self.cfg.machine:
            self.emit(json.dumps(outcome.to_dict(self.show)))
        elif outcome.is_normal:
            self.emit(self.show(outcome.term))
        else:
            self.emit(f"FUEL EXHAUSTED after {outcome.steps} steps")
            self.emit(self.show(outcome.term))
        return EXIT_OK if outcome.is_normal else EXIT_FUEL_EXHAUSTED

    def cmd_trace(self) -> int:
        term = self.load_input()
        result = trace(term, self.cfg.fuel, system=self.system)
        outcome = result.outcome
        if self.cfg.machine:
            for record in result.to_records(self.show):
                self.emit(record)
            self.emit(json.dumps({'outcome': True, **outcome.to_dict(self.show)}))
        else:
            for line in result.to_lines(self.show):
                self.emit(line)
            self.emit(outcome_line(outcome, self.show))
        return EXIT_OK if outcome.is_normal else EXIT_FUEL_EXHAUSTED

    def cmd_check(self) -> int:
        config = self.config or Config()
        gen = GenConfig.from_config(config, seed=self.cfg.seed)
        run = run_checks(gen, self.cfg.fuel, self.cfg.samples, self.cfg.seeds,
                         self.system, config.get_check_config())
        lines = run.to_records() if self.cfg.machine else run.to_lines()
        for line in lines:
            self.emit(line)
        run.raise_for_failures()
        return EXIT_OK

    def cmd_repl(self) -> int:
        from .repl import Repl

        return Repl(self).run()

    def dispatch(self) -> int:
        handlers = {
            'normalize': self.cmd_normalize,
            'trace': self.cmd_trace,
            'parse': self.cmd_parse,
            'check': self.cmd_check,
            'repl': self.cmd_repl,
        }
        return handlers[self.cfg.subcommand]()
