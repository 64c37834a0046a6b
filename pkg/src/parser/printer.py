"""
Deterministic pretty-printer

Addends come out in canonical order and parentheses only where the
grammar needs them, so print_term output re-parses to an equal term.
Closed subterms equal to a named binding print as `<name>`, except pairs
\\f.(f a b), which stay spelled out so a tensor never reads as some other
binding that happens to share its shape.

Printing works from an explicit stack of pending pieces, so arbitrarily
deep terms print without recursion.
"""

from typing import Dict, Mapping, Optional, Tuple, Union

from ..scalars import Scalar
from ..terms import App, Lam, Scaled, Sum, Term, Var, Zero

BARE_SCALARS = frozenset({'sqrt2', 'i', 'omega8'})

# A piece is literal text or a (position, term) still to be printed
Piece = Union[str, Tuple[str, Term]]


def format_weight(scalar: Scalar) -> str:
    """Scalar in weight position: bare when a single token"""
    text = scalar.format()
    if text.isdigit() or text in BARE_SCALARS:
        return text
    return f"({text})"


def is_pair(t: Term) -> bool:
    """\\f.(f a b) with f free in neither component"""
    if not isinstance(t, Lam) or not isinstance(t.body, App) or not isinstance(t.body.fun, App):
        return False
    head, first, second = t.body.fun.fun, t.body.fun.arg, t.body.arg
    return head == Var(t.var) and t.var not in first.free_vars | second.free_vars


class TermPrinter:
    """Printer with an optional table of names to fold back"""

    def __init__(self, names: Optional[Mapping[str, Term]] = None):
        self.folding: Dict[Term, str] = {}
        for name, term in (names or {}).items():
            if not term.free_vars and not is_pair(term):
                self.folding.setdefault(term, name)
        self.positions = {
            'term': self._term,
            'addend': self._addend,
            'scaled': self._scaled,
            'app_body': self._app_body,
            'app': self._app,
            'function': self._function,
            'atom': self._atom,
        }

    def print(self, t: Term) -> str:
        out = []
        pending = [('term', t)]
        while pending:
            piece = pending.pop()
            if isinstance(piece, str):
                out.append(piece)
                continue
            position, term = piece
            pending.extend(reversed(self.positions[position](term)))
        return "".join(out)

    def _named(self, t: Term) -> Optional[str]:
        if self.folding and not t.free_vars and not isinstance(t, Zero):
            name = self.folding.get(t)
            if name is not None:
                return f"<{name}>"
        return None

    def _term(self, t: Term) -> Tuple[Piece, ...]:
        named = self._named(t)
        if named:
            return (named,)
        if isinstance(t, Lam):
            return (f"\\{t.var}.", ('term', t.body))
        if isinstance(t, Sum):
            pieces = []
            for index, addend in enumerate(t.addends):
                if index:
                    pieces.append(" + ")
                pieces.append(('addend', addend))
            return tuple(pieces)
        return (('scaled', t),)

    def _addend(self, t: Term) -> Tuple[Piece, ...]:
        if isinstance(t, Lam) and not self._named(t):
            return ("(", ('term', t), ")")
        return (('scaled', t),)

    def _scaled(self, t: Term) -> Tuple[Piece, ...]:
        named = self._named(t)
        if named:
            return (named,)
        if isinstance(t, Scaled):
            return (f"{format_weight(t.scalar)}.", ('app_body', t.body))
        return (('app', t),)

    def _app_body(self, t: Term) -> Tuple[Piece, ...]:
        if self._named(t) or isinstance(t, (Var, Zero, App)):
            return (('app', t),)
        return ("(", ('term', t), ")")

    def _app(self, t: Term) -> Tuple[Piece, ...]:
        named = self._named(t)
        if named:
            return (named,)
        if isinstance(t, App):
            return (('function', t.fun), " ", ('atom', t.arg))
        return (('atom', t),)

    def _function(self, t: Term) -> Tuple[Piece, ...]:
        if self._named(t) or isinstance(t, App):
            return (('app', t),)
        return (('atom', t),)

    def _atom(self, t: Term) -> Tuple[Piece, ...]:
        named = self._named(t)
        if named:
            return (named,)
        if isinstance(t, Var):
            return (t.name,)
        if isinstance(t, Zero):
            return ("0v",)
        return ("(", ('term', t), ")")


def print_term(t: Term, names: Optional[Mapping[str, Term]] = None) -> str:
    return TermPrinter(names).print(t)
