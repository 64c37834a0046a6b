"""
Tests for exact scalar arithmetic
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.exceptions import ParseError, ScalarDomainError
from src.parser import format_weight, parse_scalar
from src.scalars import (
    ExactScalar, RationalScalar, ScalarDomains, format_scalar, is_one, is_zero,
    omega8_complex, one, scalar_div, scalar_sub, to_complex, zero,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
exact_scalars = st.builds(ExactScalar, rationals, rationals, rationals, rationals)
nonzero_scalars = exact_scalars.filter(lambda x: not x.is_zero())


class TestRingLaws:
    """Field laws of Q[i, sqrt2], checked on random values"""

    @given(exact_scalars, exact_scalars, exact_scalars)
    def test_addition_and_multiplication_associate(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)

    @given(exact_scalars, exact_scalars)
    def test_commutativity(self, x, y):
        assert x + y == y + x
        assert x * y == y * x

    @given(exact_scalars, exact_scalars, exact_scalars)
    def test_distributivity(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @given(exact_scalars)
    def test_units_and_additive_inverse(self, x):
        assert x + zero() == x
        assert x * one() == x
        assert x * zero() == zero()
        assert is_zero(x + (-x))
        assert scalar_sub(x, x) == zero()

    @settings(max_examples=60)
    @given(nonzero_scalars)
    def test_multiplicative_inverse(self, x):
        assert is_one(x * x.inverse())
        assert scalar_div(x, x) == one()

    @given(exact_scalars, exact_scalars)
    def test_evaluation_is_a_ring_homomorphism(self, x, y):
        assert np.isclose(to_complex(x + y), to_complex(x) + to_complex(y))
        assert np.isclose(to_complex(x * y), to_complex(x) * to_complex(y))

    @given(exact_scalars)
    def test_conjugate_gives_real_norm(self, x):
        norm = x * x.conjugate()
        assert norm.c == 0 and norm.d == 0
        assert np.isclose(to_complex(norm), abs(to_complex(x)) ** 2)


class TestConstants:
    """Named constants and exact identities"""

    def test_sqrt2_squares_to_two(self):
        assert ExactScalar.sqrt2() * ExactScalar.sqrt2() == ExactScalar.of(2)

    def test_i_squares_to_minus_one(self):
        assert ExactScalar.i() ** 2 == ExactScalar.of(-1)

    def test_omega8_powers(self):
        w = ExactScalar.omega8()
        assert w ** 2 == ExactScalar.i()
        assert w ** 4 == ExactScalar.of(-1)
        assert w ** 8 == one()
        assert w ** -1 == w.conjugate()

    def test_omega8_numeric_value(self):
        assert np.isclose(to_complex(ExactScalar.omega8()), np.exp(1j * np.pi / 4))
        assert np.isclose(omega8_complex(), np.exp(1j * np.pi / 4))

    def test_hadamard_amplitudes_cancel(self):
        half_sqrt2 = parse_scalar("sqrt2/2")
        assert half_sqrt2 * half_sqrt2 + half_sqrt2 * half_sqrt2 == one()
        assert half_sqrt2 * half_sqrt2 - half_sqrt2 * half_sqrt2 == zero()

    def test_inverse_of_irrational(self):
        x = ExactScalar(Fraction(1), Fraction(1))  # 1 + sqrt2
        assert x.inverse() == ExactScalar(Fraction(-1), Fraction(1))

    def test_unknown_constant(self):
        with pytest.raises(ScalarDomainError):
            ExactScalar.constant('pi')

    def test_division_by_zero(self):
        with pytest.raises(ScalarDomainError):
            zero().inverse()
        with pytest.raises(ScalarDomainError):
            RationalScalar.zero().inverse()


class TestFormatting:
    """Canonical text of scalars"""

    @pytest.mark.parametrize("text,expected", [
        ("0", "0"),
        ("1", "1"),
        ("-1/2", "-1/2"),
        ("sqrt2/2", "sqrt2/2"),
        ("3*i/4", "3*i/4"),
        ("1/2 + sqrt2/2", "1/2 + sqrt2/2"),
        ("sqrt2/2 + i*sqrt2/2", "omega8"),
        ("1 - i", "1 - i"),
        ("i*sqrt2", "i*sqrt2"),
    ])
    def test_format(self, text, expected):
        assert format_scalar(parse_scalar(text)) == expected

    @pytest.mark.parametrize("text,weight", [
        ("2", "2"),
        ("sqrt2", "sqrt2"),
        ("omega8", "omega8"),
        ("1/2", "(1/2)"),
        ("-1", "(-1)"),
        ("1 + i", "(1 + i)"),
    ])
    def test_weight_parenthesises_compound_scalars(self, text, weight):
        assert format_weight(parse_scalar(text)) == weight

    @given(exact_scalars)
    def test_format_parses_back(self, x):
        assert parse_scalar(x.format()) == x


class TestDomains:
    """Scalar domain registry"""

    def test_default_domain(self):
        assert ScalarDomains.get() is ExactScalar
        assert set(ScalarDomains.available()) == {'qi_sqrt2', 'rational'}

    def test_unknown_domain(self):
        with pytest.raises(ValueError):
            ScalarDomains.get('reals')

    def test_rational_domain_arithmetic(self):
        half = parse_scalar("1/2", domain=RationalScalar)
        assert isinstance(half, RationalScalar)
        assert half + half == RationalScalar.one()
        assert half.format() == "1/2"

    def test_rational_domain_rejects_irrational_constants(self):
        with pytest.raises(ParseError):
            parse_scalar("sqrt2", domain=RationalScalar)

    def test_domains_do_not_compare_equal(self):
        assert ExactScalar.one() != RationalScalar.one()
