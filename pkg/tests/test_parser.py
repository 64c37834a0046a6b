"""
Tests for the tokenizer, parser and printer
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.exceptions import (
    DuplicateBindingError, OpenBindingError, ParseError, UnknownIdentifierError,
)
from src.harness import GenConfig, generate_term, roundtrip_sample
from src.parser import (
    TokenKind, describe_span, is_pair, parse_program, parse_scalar, parse_term, print_term,
    tokenize,
)
from src.scalars import ExactScalar
from src.stdlib import DJ1, FALSE, HALF_SQRT2, IDENTITY, NOT, TRUE
from src.terms import App, Lam, Scaled, Var, Zero, make_sum

ONE = ExactScalar.one()
MINUS_ONE = ExactScalar.of(-1)
HALF = parse_scalar("1/2")

a, b, c = Var('a'), Var('b'), Var('c')


class TestTokenizer:
    """Token stream"""

    def test_zero_vector_and_integers(self):
        kinds = [token.kind for token in tokenize("0v 0 . 0va")]
        assert kinds == [TokenKind.ZERO_VECTOR, TokenKind.INT, TokenKind.DOT,
                         TokenKind.INT, TokenKind.IDENT, TokenKind.EOF]

    def test_lambda_spellings(self):
        assert tokenize("\\x.x")[0].kind is TokenKind.LAMBDA
        assert tokenize("λx.x")[0].kind is TokenKind.LAMBDA

    def test_comments_are_skipped(self):
        tokens = tokenize("a # comment\n+ b")
        assert [token.text for token in tokens[:-1]] == ['a', '+', 'b']
        assert tokens[2].span.line == 2

    def test_let_is_a_keyword(self):
        assert tokenize("let")[0].kind is TokenKind.LET

    def test_unknown_character(self):
        with pytest.raises(ParseError) as exc_info:
            tokenize("a $")
        assert exc_info.value.span.column == 3


class TestTerms:
    """Grammar and precedence"""

    def test_abstraction(self):
        assert parse_term("\\x.x") == IDENTITY
        assert parse_term("λx.λy.x") == TRUE

    def test_application_is_left_associative(self):
        assert parse_term("a b c") == App(App(a, b), c)
        assert parse_term("a (b c)") == App(a, App(b, c))

    def test_abstraction_body_extends_right(self):
        assert parse_term("\\x.x a") == Lam('x', App(Var('x'), a))
        assert parse_term("a \\x.x") == App(a, IDENTITY)

    def test_scaling_binds_tighter_than_sum(self):
        assert parse_term("(1/2).a + b") == make_sum([Scaled(HALF, a), b])
        assert parse_term("2.a b") == Scaled(ExactScalar.of(2), App(a, b))

    def test_subtraction_is_sugar(self):
        assert parse_term("a - b") == make_sum([a, Scaled(MINUS_ONE, b)])
        assert parse_term("-1.a") == Scaled(MINUS_ONE, a)

    def test_scalar_expressions_as_weights(self):
        assert parse_term("sqrt2.a") == Scaled(ExactScalar.sqrt2(), a)
        assert parse_term("(1 + i).a") == Scaled(parse_scalar("1 + i"), a)
        assert parse_term("((1/2 + sqrt2/2)*i).a") == \
            Scaled(parse_scalar("i/2 + i*sqrt2/2"), a)

    def test_parenthesised_term_is_not_a_weight(self):
        assert parse_term("(a b) c") == App(App(a, b), c)
        assert parse_term("(a)") == a

    def test_zero_vector(self):
        assert parse_term("0v") == Zero()
        assert parse_term("0.a") == Scaled(ExactScalar.zero(), a)
        assert parse_term("0v + a") == make_sum([Zero(), a])

    def test_weighted_difference_keeps_its_structure(self, bindings):
        term = parse_term("sqrt2/2 . (false - true)", bindings=bindings)
        assert term == Scaled(HALF_SQRT2, make_sum([FALSE, Scaled(MINUS_ONE, TRUE)]))

    def test_quote_and_unquote(self):
        quoted = parse_term("[a]")
        assert isinstance(quoted, Lam)
        assert quoted.body == a
        assert quoted.var != 'a'
        assert parse_term("{a}") == App(a, FALSE)
        assert parse_term("{[a]}") == App(Lam('x', a), FALSE)

    def test_named_reference(self, bindings):
        assert parse_term("<true>", bindings=bindings) == TRUE
        with pytest.raises(UnknownIdentifierError):
            parse_term("<nothing>", bindings=bindings)

    def test_lambda_binder_shadows_bindings(self, bindings):
        assert parse_term("\\true.true", bindings=bindings) == IDENTITY


class TestResolution:
    """Identifier resolution and errors"""

    def test_strict_mode_rejects_free_identifiers(self):
        with pytest.raises(UnknownIdentifierError) as exc_info:
            parse_term("\\x.y", lenient=False)
        assert exc_info.value.span.column == 4
        assert exc_info.value.details['name'] == 'y'

    def test_lenient_mode_makes_free_variables(self):
        assert parse_term("\\x.y").free_vars == {'y'}

    def test_scalar_names_are_reserved(self):
        with pytest.raises(ParseError):
            parse_term("i")
        with pytest.raises(ParseError):
            parse_term("\\sqrt2.a")

    @pytest.mark.parametrize("src", ["\\x.", "(a", "a )", "a +", "[a", "1/0 . a", "let"])
    def test_malformed_input(self, src):
        with pytest.raises(ParseError):
            parse_term(src)

    def test_describe_span(self):
        with pytest.raises(ParseError) as exc_info:
            parse_term("a )")
        assert describe_span("a )", exc_info.value.span) == "a )\n  ^"


class TestPrograms:
    """let-bindings and the trailing main term"""

    def test_bindings_then_main(self, bindings):
        program = parse_program("let p = \\x.x; p true", bindings=bindings)
        assert [name for name, _ in program] == ['p']
        assert program.as_dict()['p'] == IDENTITY
        assert program.main == App(IDENTITY, TRUE)

    def test_bindings_only(self):
        program = parse_program("let u = \\x.x; let v = u u;")
        assert program.main is None
        assert len(program) == 2
        assert program.as_dict()['v'] == App(IDENTITY, IDENTITY)

    def test_duplicate_binding(self):
        with pytest.raises(DuplicateBindingError):
            parse_program("let u = \\x.x; let u = \\y.y;")

    def test_prelude_names_cannot_be_rebound(self, bindings):
        with pytest.raises(DuplicateBindingError):
            parse_program("let true = \\x.x;", bindings=bindings)

    def test_open_binding(self):
        with pytest.raises(OpenBindingError) as exc_info:
            parse_program("let f = \\x.y;", lenient=True)
        assert exc_info.value.details['free'] == ['y']

    def test_missing_semicolon(self):
        with pytest.raises(ParseError):
            parse_program("let u = \\x.x u")


class TestPrinter:
    """Canonical printing"""

    def test_folds_prelude_names(self, bindings):
        assert print_term(Scaled(ExactScalar.omega8(), TRUE), bindings) == "omega8.<true>"
        assert print_term(make_sum([TRUE, FALSE]), bindings) == "<false> + <true>"
        assert print_term(Scaled(HALF, make_sum([TRUE, FALSE])), bindings) == \
            "(1/2).(<false> + <true>)"

    def test_without_names(self):
        assert print_term(TRUE) == "\\x.\\y.x"
        assert print_term(Scaled(ExactScalar.omega8(), IDENTITY)) == "omega8.(\\x.x)"

    def test_applications(self):
        assert print_term(App(App(a, b), c)) == "a b c"
        assert print_term(App(a, App(b, c))) == "a (b c)"
        assert print_term(App(IDENTITY, a)) == "(\\x.x) a"
        assert print_term(App(a, Scaled(HALF, b))) == "a ((1/2).b)"

    def test_zero_and_nested_weights(self):
        assert print_term(Zero()) == "0v"
        assert print_term(Scaled(ExactScalar.of(2), Zero())) == "2.0v"
        assert print_term(Scaled(HALF, Scaled(MINUS_ONE, a))) == "(1/2).((-1).a)"

    def test_open_terms_are_not_folded(self, bindings):
        assert print_term(Lam('x', a), bindings) == "\\x.a"

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32 - 1), st.booleans())
    def test_print_parses_back(self, bindings, seed, closed):
        cfg = GenConfig(max_depth=5, closed_only=closed)
        term = generate_term(cfg, np.random.default_rng(seed))
        assert parse_term(print_term(term)) == term
        assert parse_term(print_term(term, bindings), bindings=bindings) == term

    def test_pairs_stay_spelled_out(self, bindings, nf):
        assert is_pair(NOT)
        assert print_term(NOT, bindings) == "\\y.y <false> <true>"
        text = print_term(nf(App(DJ1, IDENTITY)), bindings)
        assert '<Not>' not in text
        assert text.endswith(" <false> <true>")

    def test_deep_terms_print(self):
        t = a
        for _ in range(5_000):
            t = App(t, b)
        text = print_term(t)
        assert text.startswith("a b b")
        assert len(text) == 1 + 2 * 5_000
        assert parse_term(print_term(Lam('x', t))).depth == t.depth + 1

    @pytest.mark.slow
    @pytest.mark.parametrize("closed", [True, False])
    def test_ten_thousand_terms_parse_back(self, bindings, closed):
        cfg = GenConfig(max_depth=6, closed_only=closed)
        assert roundtrip_sample(cfg, samples=10_000).passed
        assert roundtrip_sample(cfg, samples=10_000, names=bindings).passed
