"""
Tokenizer for the surface syntax
"""

from dataclasses import dataclass
from enum import Enum
from typing import List

from ..exceptions import ParseError, SourceSpan


class TokenKind(Enum):
    LAMBDA = "\\"
    DOT = "."
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    LPAREN = "("
    RPAREN = ")"
    LANGLE = "<"
    RANGLE = ">"
    LBRACKET = "["
    RBRACKET = "]"
    LBRACE = "{"
    RBRACE = "}"
    EQUALS = "="
    SEMI = ";"
    INT = "integer"
    IDENT = "identifier"
    ZERO_VECTOR = "0v"
    LET = "let"
    EOF = "end of input"


SYMBOLS = {
    '\\': TokenKind.LAMBDA,
    'λ': TokenKind.LAMBDA,
    '.': TokenKind.DOT,
    '+': TokenKind.PLUS,
    '-': TokenKind.MINUS,
    '*': TokenKind.STAR,
    '/': TokenKind.SLASH,
    '(': TokenKind.LPAREN,
    ')': TokenKind.RPAREN,
    '<': TokenKind.LANGLE,
    '>': TokenKind.RANGLE,
    '[': TokenKind.LBRACKET,
    ']': TokenKind.RBRACKET,
    '{': TokenKind.LBRACE,
    '}': TokenKind.RBRACE,
    '=': TokenKind.EQUALS,
    ';': TokenKind.SEMI,
}

KEYWORDS = {'let': TokenKind.LET}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan

    def describe(self) -> str:
        if self.kind in (TokenKind.IDENT, TokenKind.INT):
            return f"{self.kind.value} '{self.text}'"
        return f"'{self.kind.value}'"


def _ident_start(ch: str) -> bool:
    return ch.isascii() and ch.isalpha()


def _ident_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch in "_'")


def tokenize(src: str) -> List[Token]:
    """
    Split source text into tokens; `#` starts a comment running to the end
    of the line.

    Raises:
        ParseError: On a character that starts no token
    """
    tokens: List[Token] = []
    pos = 0
    line = 1
    line_start = 0
    length = len(src)

    def span(start: int, end: int) -> SourceSpan:
        return SourceSpan(start, end, line, start - line_start + 1)

    while pos < length:
        ch = src[pos]
        if ch == '\n':
            pos += 1
            line += 1
            line_start = pos
            continue
        if ch.isspace():
            pos += 1
            continue
        if ch == '#':
            while pos < length and src[pos] != '\n':
                pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < length and src[pos].isdigit():
                pos += 1
            text = src[start:pos]
            if text == '0' and pos < length and src[pos] == 'v' \
                    and not (pos + 1 < length and _ident_char(src[pos + 1])):
                pos += 1
                tokens.append(Token(TokenKind.ZERO_VECTOR, '0v', span(start, pos)))
            else:
                tokens.append(Token(TokenKind.INT, text, span(start, pos)))
            continue
        if _ident_start(ch):
            start = pos
            while pos < length and _ident_char(src[pos]):
                pos += 1
            text = src[start:pos]
            kind = KEYWORDS.get(text, TokenKind.IDENT)
            tokens.append(Token(kind, text, span(start, pos)))
            continue
        if ch in SYMBOLS:
            tokens.append(Token(SYMBOLS[ch], ch, span(pos, pos + 1)))
            pos += 1
            continue
        raise ParseError(f"Unexpected character {ch!r}", span(pos, pos + 1))

    tokens.append(Token(TokenKind.EOF, '', span(length, length)))
    return tokens
