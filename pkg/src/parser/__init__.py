"""Surface syntax: tokenizer, parser and printer"""

from .lexer import Token, TokenKind, tokenize
from .parser import (
    Parser, Program, SCALAR_KEYWORDS,
    parse_term, parse_program, parse_scalar, describe_span,
)
from .printer import TermPrinter, print_term, format_weight, is_pair

__all__ = [
    'Token', 'TokenKind', 'tokenize',
    'Parser', 'Program', 'SCALAR_KEYWORDS',
    'parse_term', 'parse_program', 'parse_scalar', 'describe_span',
    'TermPrinter', 'print_term', 'format_weight', 'is_pair',
]
