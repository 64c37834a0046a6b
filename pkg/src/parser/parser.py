"""
Recursive-descent parser

    program  := binding* term? ";"? EOF
    binding  := "let" ident "=" term ";"
    term     := sum
    sum      := scaled (("+" | "-") scaled)*
    scaled   := (sexpr ".")? app
    app      := atom+ lambda? | lambda
    lambda   := "\\" ident "." term
    atom     := ident | "<" ident ">" | "0v" | "(" term ")"
              | "[" term "]" | "{" term "}"
    sexpr    := sterm (("+" | "-") sterm)*
    sterm    := sfactor (("*" | "/") sfactor)*
    sfactor  := "-" sfactor | integer | "sqrt2" | "i" | "omega8" | "(" sexpr ")"

`[t]` and `{t}` are quote and unquote. `a - b` is sugar for a + (-1).b.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Type

from .lexer import Token, TokenKind, tokenize
from ..exceptions import (
    DuplicateBindingError, OpenBindingError, ParseError, ScalarDomainError,
    SourceSpan, UnknownIdentifierError,
)
from ..scalars import Scalar, ScalarDomains
from ..stdlib.encodings import quote, unquote
from ..terms import RESERVED_NAMES, App, Lam, Scaled, Term, Var, Zero, make_sum

SCALAR_KEYWORDS = RESERVED_NAMES - {'let'}

SCALAR_START = {TokenKind.INT, TokenKind.MINUS, TokenKind.LPAREN}

ATOM_START = {
    TokenKind.IDENT, TokenKind.LANGLE, TokenKind.ZERO_VECTOR, TokenKind.LPAREN,
    TokenKind.LBRACKET, TokenKind.LBRACE,
}


@dataclass
class Program:
    """Let-bindings in definition order plus an optional main term"""
    bindings: List[Tuple[str, Term]] = field(default_factory=list)
    main: Optional[Term] = None

    def __iter__(self) -> Iterator[Tuple[str, Term]]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def as_dict(self) -> Dict[str, Term]:
        return dict(self.bindings)


class Parser:
    """
    Parser over a token list

    Identifiers resolve to the innermost lambda binder first, then to a
    binding (inlined as its closed term), then to a free variable when
    `lenient` is set; anything else is an UnknownIdentifierError.
    """

    def __init__(self, src: str, bindings: Optional[Mapping[str, Term]] = None,
                 lenient: bool = True, domain: Optional[Type[Scalar]] = None):
        self.tokens = tokenize(src)
        self.pos = 0
        self.bindings: Dict[str, Term] = dict(bindings or {})
        self.lenient = lenient
        self.domain = domain or ScalarDomains.get()
        self.scope: List[str] = []

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------
    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        index = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def at(self, kind: TokenKind) -> bool:
        return self.current.kind is kind

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        if not self.at(kind):
            raise ParseError(f"Expected '{kind.value}', found {self.current.describe()}",
                             self.current.span)
        return self.advance()

    # ------------------------------------------------------------------
    # Entry points
    # ------------------------------------------------------------------
    def parse_term(self) -> Term:
        term = self.term()
        if not self.at(TokenKind.EOF):
            raise ParseError(f"Unexpected {self.current.describe()} after term",
                             self.current.span)
        return term

    def parse_program(self) -> Program:
        program = Program()
        while self.at(TokenKind.LET):
            name, term = self.binding()
            program.bindings.append((name, term))
        if not self.at(TokenKind.EOF):
            program.main = self.term()
            if self.at(TokenKind.SEMI):
                self.advance()
        if not self.at(TokenKind.EOF):
            raise ParseError(f"Unexpected {self.current.describe()}", self.current.span)
        return program

    def parse_scalar(self) -> Scalar:
        value = self.sexpr()
        if not self.at(TokenKind.EOF):
            raise ParseError(f"Unexpected {self.current.describe()} after scalar",
                             self.current.span)
        return value

    # ------------------------------------------------------------------
    # Grammar
    # ------------------------------------------------------------------
    def binding(self) -> Tuple[str, Term]:
        self.expect(TokenKind.LET)
        token = self.expect(TokenKind.IDENT)
        name = token.text
        self._check_not_reserved(token)
        if name in self.bindings:
            raise DuplicateBindingError(name, token.span)
        self.expect(TokenKind.EQUALS)
        term = self.term()
        self.expect(TokenKind.SEMI)
        if term.free_vars:
            raise OpenBindingError(name, set(term.free_vars), token.span)
        self.bindings[name] = term
        return name, term

    def term(self) -> Term:
        addends = [self.scaled()]
        while self.at(TokenKind.PLUS) or self.at(TokenKind.MINUS):
            negate = self.advance().kind is TokenKind.MINUS
            operand = self.scaled()
            if negate:
                operand = Scaled(-self.domain.one(), operand)
            addends.append(operand)
        return make_sum(addends)

    def scaled(self) -> Term:
        if self._may_start_scalar():
            saved = self.pos
            weight = None
            try:
                weight = self.sexpr()
            except ParseError:
                pass
            if weight is not None and self.at(TokenKind.DOT):
                self.advance()
                return Scaled(weight, self.app())
            self.pos = saved
        return self.app()

    def _may_start_scalar(self) -> bool:
        token = self.current
        return token.kind in SCALAR_START or \
            (token.kind is TokenKind.IDENT and token.text in SCALAR_KEYWORDS)

    def app(self) -> Term:
        if self.at(TokenKind.LAMBDA):
            return self.lam()
        if self.current.kind not in ATOM_START:
            raise ParseError(f"Expected a term, found {self.current.describe()}",
                             self.current.span)
        result = self.atom()
        while self.current.kind in ATOM_START or self.at(TokenKind.LAMBDA):
            if self.at(TokenKind.LAMBDA):
                return App(result, self.lam())
            result = App(result, self.atom())
        return result

    def lam(self) -> Term:
        self.expect(TokenKind.LAMBDA)
        token = self.expect(TokenKind.IDENT)
        self._check_not_reserved(token)
        self.expect(TokenKind.DOT)
        self.scope.append(token.text)
        try:
            body = self.term()
        finally:
            self.scope.pop()
        return Lam(token.text, body)

    def atom(self) -> Term:
        token = self.advance()
        kind = token.kind
        if kind is TokenKind.IDENT:
            return self._resolve(token)
        if kind is TokenKind.LANGLE:
            name_token = self.expect(TokenKind.IDENT)
            self.expect(TokenKind.RANGLE)
            if name_token.text not in self.bindings:
                raise UnknownIdentifierError(name_token.text, name_token.span)
            return self.bindings[name_token.text]
        if kind is TokenKind.ZERO_VECTOR:
            return Zero()
        if kind is TokenKind.LPAREN:
            inner = self.term()
            self.expect(TokenKind.RPAREN)
            return inner
        if kind is TokenKind.LBRACKET:
            inner = self.term()
            self.expect(TokenKind.RBRACKET)
            return quote(inner)
        if kind is TokenKind.LBRACE:
            inner = self.term()
            self.expect(TokenKind.RBRACE)
            return unquote(inner)
        raise ParseError(f"Expected a term, found {token.describe()}", token.span)

    def _resolve(self, token: Token) -> Term:
        name = token.text
        if name in SCALAR_KEYWORDS:
            raise ParseError(f"Scalar '{name}' used where a term is expected", token.span)
        if name in self.scope:
            return Var(name)
        if name in self.bindings:
            return self.bindings[name]
        if self.lenient:
            return Var(name)
        raise UnknownIdentifierError(name, token.span)

    def _check_not_reserved(self, token: Token):
        if token.text in SCALAR_KEYWORDS:
            raise ParseError(f"'{token.text}' is a reserved scalar name", token.span)

    # ------------------------------------------------------------------
    # Scalars
    # ------------------------------------------------------------------
    def sexpr(self) -> Scalar:
        value = self.sterm()
        while self.at(TokenKind.PLUS) or self.at(TokenKind.MINUS):
            if self.advance().kind is TokenKind.PLUS:
                value = value + self.sterm()
            else:
                value = value - self.sterm()
        return value

    def sterm(self) -> Scalar:
        value = self.sfactor()
        while self.at(TokenKind.STAR) or self.at(TokenKind.SLASH):
            operator = self.advance()
            operand = self.sfactor()
            if operator.kind is TokenKind.STAR:
                value = value * operand
            else:
                try:
                    value = value / operand
                except ScalarDomainError as e:
                    raise ParseError(e.message, operator.span)
        return value

    def sfactor(self) -> Scalar:
        token = self.advance()
        if token.kind is TokenKind.MINUS:
            return -self.sfactor()
        if token.kind is TokenKind.INT:
            return self.domain.of(int(token.text))
        if token.kind is TokenKind.IDENT and token.text in SCALAR_KEYWORDS:
            try:
                return self.domain.constant(token.text)
            except ScalarDomainError as e:
                raise ParseError(e.message, token.span)
        if token.kind is TokenKind.LPAREN:
            value = self.sexpr()
            self.expect(TokenKind.RPAREN)
            return value
        raise ParseError(f"Expected a scalar, found {token.describe()}", token.span)


def parse_term(src: str, bindings: Optional[Mapping[str, Term]] = None,
               lenient: bool = True, domain: Optional[Type[Scalar]] = None) -> Term:
    """Parse a single term; free identifiers become variables unless `lenient` is off"""
    return Parser(src, bindings, lenient, domain).parse_term()


def parse_program(src: str, bindings: Optional[Mapping[str, Term]] = None,
                  lenient: bool = False, domain: Optional[Type[Scalar]] = None) -> Program:
    """Parse `let name = term;` bindings followed by an optional main term"""
    return Parser(src, bindings, lenient, domain).parse_program()


def parse_scalar(src: str, domain: Optional[Type[Scalar]] = None) -> Scalar:
    return Parser(src, domain=domain).parse_scalar()


def describe_span(src: str, span: SourceSpan) -> str:
    """The offending source line with a caret under the span"""
    lines = src.splitlines() or ['']
    index = min(span.line - 1, len(lines) - 1)
    width = max(1, span.end - span.start)
    return f"{lines[index]}\n{' ' * (span.column - 1)}{'^' * width}"
