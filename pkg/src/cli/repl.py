"""
Interactive session

Each line is a term, one or more `let` bindings, or both; the normal form
is printed. Lines starting with ':' are directives.
"""

from typing import Callable, Dict, Optional

from .commands import CommandRunner, outcome_line
from ..exceptions import CalculusException, ParseError
from ..logger import get_logger
from ..parser import describe_span, parse_program, parse_term, print_term
from ..rewrite import normalize, trace
from ..terms import Term
from ..utils import EXIT_OK

try:
    import readline  # noqa: F401  line editing for input()
except ImportError:
    pass

logger = get_logger('repl')

HELP = """\
  <term>                 normalise and print
  let x = <term>; ...    define closed terms (a term may follow)
  :trace on|off          print every rewrite step
  :fuel N                step budget
  :eq <term> = <term>    compare normal forms
  :names on|off          fold closed subterms back to binding names
  :help                  this text
  :quit                  leave"""


class Repl:
    prompt = 'lambdalin> '

    def __init__(self, runner: CommandRunner, input_fn: Optional[Callable[[str], str]] = None):
        self.runner = runner
        self.input_fn = input_fn or input
        self.bindings: Dict[str, Term] = runner.prelude.as_dict()
        self.fuel = runner.cfg.fuel
        self.tracing = False
        self.naming = runner.cfg.prelude_names
        self.running = True
        self.source = ''
        self.directives: Dict[str, Callable[[str], None]] = {
            'trace': self.set_trace,
            'fuel': self.set_fuel,
            'eq': self.check_eq,
            'names': self.set_names,
            'help': self.help,
            'quit': self.quit,
            'q': self.quit,
        }

    def emit(self, line: str):
        self.runner.emit(line)

    def show(self, t: Term) -> str:
        return print_term(t, self.bindings if self.naming else None)

    def run(self) -> int:
        logger.info(f"REPL started with {len(self.bindings)} bindings")
        while self.running:
            try:
                line = self.input_fn(self.prompt)
            except (EOFError, KeyboardInterrupt):
                break
            self.handle(line)
        return EXIT_OK

    def handle(self, line: str):
        text = line.strip()
        if not text or text.startswith('#'):
            return
        try:
            if text.startswith(':'):
                self.directive(text[1:])
            else:
                self.evaluate(text)
        except ParseError as e:
            self.emit(f"error: {e}")
            self.emit(describe_span(self.source, e.span))
        except (CalculusException, ValueError) as e:
            self.emit(f"error: {e}")

    def directive(self, text: str):
        name, _, argument = text.partition(' ')
        handler = self.directives.get(name)
        if handler is None:
            raise ValueError(f"Unknown directive :{name} (try :help)")
        handler(argument.strip())

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------
    def parse(self, source: str) -> Term:
        self.source = source
        return parse_term(source, bindings=self.bindings, lenient=True)

    def evaluate(self, text: str):
        self.source = text
        program = parse_program(text, bindings=self.bindings, lenient=True)
        for name, term in program.bindings:
            self.bindings[name] = term
            self.emit(f"{name} defined")
        if program.main is not None:
            self.report(program.main)

    def report(self, term: Term):
        if self.tracing:
            result = trace(term, self.fuel, system=self.runner.system)
            for line in result.to_lines(self.show):
                self.emit(line)
            self.emit(outcome_line(result.outcome, self.show))
            return
        outcome = normalize(term, self.fuel, self.runner.system)
        if not outcome.is_normal:
            self.emit(f"FUEL EXHAUSTED after {outcome.steps} steps")
        self.emit(self.show(outcome.term))

    # ------------------------------------------------------------------
    # Directives
    # ------------------------------------------------------------------
    @staticmethod
    def _switch(argument: str, directive: str) -> bool:
        if argument not in ('on', 'off'):
            raise ValueError(f":{directive} takes on or off")
        return argument == 'on'

    def set_trace(self, argument: str):
        self.tracing = self._switch(argument, 'trace')
        self.emit(f"trace {argument}")

    def set_names(self, argument: str):
        self.naming = self._switch(argument, 'names')
        self.emit(f"names {argument}")

    def set_fuel(self, argument: str):
        try:
            fuel = int(argument)
        except ValueError:
            raise ValueError(f":fuel takes a non-negative integer, got {argument!r}")
        if fuel < 0:
            raise ValueError(f":fuel takes a non-negative integer, got {fuel}")
        self.fuel = fuel
        self.emit(f"fuel {fuel}")

    def check_eq(self, argument: str):
        left_src, separator, right_src = argument.partition('=')
        if not separator:
            raise ValueError(":eq takes <term> = <term>")
        left = normalize(self.parse(left_src), self.fuel, self.runner.system)
        right = normalize(self.parse(right_src), self.fuel, self.runner.system)
        if not (left.is_normal and right.is_normal):
            self.emit("unknown: fuel exhausted")
            return
        self.emit("true" if left.term == right.term else "false")

    def help(self, argument: Optional[str] = None):
        self.emit(HELP)

    def quit(self, argument: Optional[str] = None):
        self.running = False
