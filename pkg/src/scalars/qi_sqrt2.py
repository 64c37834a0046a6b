"""
Exact scalars in Q[i, sqrt2]

A value is a + b*sqrt2 + c*i + d*i*sqrt2 with rational a, b, c, d.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .base import Scalar, format_rational_monomial, join_monomials
from ..exceptions import ScalarDomainError

RationalLike = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class ExactScalar(Scalar):
    """Canonical element of Q[i, sqrt2]"""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    domain_name = "qi_sqrt2"

    def __post_init__(self):
        # Fraction keeps numerator/denominator reduced with denominator > 0
        for field_name in ('a', 'b', 'c', 'd'):
            value = getattr(self, field_name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, field_name, Fraction(value))

    # Constructors
    @classmethod
    def zero(cls) -> "ExactScalar":
        return cls()

    @classmethod
    def one(cls) -> "ExactScalar":
        return cls(Fraction(1))

    @classmethod
    def of(cls, value: RationalLike) -> "ExactScalar":
        return cls(Fraction(value))

    @classmethod
    def sqrt2(cls) -> "ExactScalar":
        return cls(b=Fraction(1))

    @classmethod
    def i(cls) -> "ExactScalar":
        return cls(c=Fraction(1))

    @classmethod
    def omega8(cls) -> "ExactScalar":
        """e^{i pi/4} = sqrt2/2 + (sqrt2/2) i"""
        return cls(b=Fraction(1, 2), d=Fraction(1, 2))

    @classmethod
    def constant(cls, name: str) -> "ExactScalar":
        constants = {
            'sqrt2': cls.sqrt2,
            'i': cls.i,
            'omega8': cls.omega8,
        }
        if name not in constants:
            raise ScalarDomainError(f"Unknown scalar constant '{name}'", cls.domain_name)
        return constants[name]()

    def zero_like(self) -> "ExactScalar":
        return ExactScalar.zero()

    def one_like(self) -> "ExactScalar":
        return ExactScalar.one()

    # Arithmetic
    def __add__(self, other: Scalar) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: Scalar) -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        # Write x = p + q i with p, q in Q[sqrt2]; sqrt2*sqrt2 = 2, i*i = -1
        p1, q1 = (self.a, self.b), (self.c, self.d)
        p2, q2 = (other.a, other.b), (other.c, other.d)
        real = _sub2(_mul2(p1, p2), _mul2(q1, q2))
        imag = _add2(_mul2(p1, q2), _mul2(q1, p2))
        return ExactScalar(real[0], real[1], imag[0], imag[1])

    def conjugate(self) -> "ExactScalar":
        """Complex conjugate"""
        return ExactScalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ScalarDomainError("Division by zero", self.domain_name)
        # 1/(p + q i) = (p - q i) / (p^2 + q^2); then rationalise over sqrt2
        p, q = (self.a, self.b), (self.c, self.d)
        norm = _add2(_mul2(p, p), _mul2(q, q))
        e, f = norm
        denominator = e * e - 2 * f * f
        norm_inverse = (e / denominator, -f / denominator)
        real = _mul2(p, norm_inverse)
        imag = _mul2((-q[0], -q[1]), norm_inverse)
        return ExactScalar(real[0], real[1], imag[0], imag[1])

    # Predicates
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 0

    @property
    def key(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def to_complex(self) -> complex:
        root = math.sqrt(2)
        return complex(float(self.a) + float(self.b) * root,
                       float(self.c) + float(self.d) * root)

    def format(self) -> str:
        if self == ExactScalar.omega8():
            return "omega8"
        parts = [
            format_rational_monomial(coefficient, monomial)
            for coefficient, monomial in ((self.a, ""), (self.b, "sqrt2"),
                                          (self.c, "i"), (self.d, "i*sqrt2"))
            if coefficient != 0
        ]
        return join_monomials(parts)

    def __repr__(self) -> str:
        return f"ExactScalar({self.format()})"


def _add2(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _sub2(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _mul2(x, y):
    """Product in Q[sqrt2] of (x0 + x1 sqrt2)(y0 + y1 sqrt2)"""
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def omega8_complex() -> complex:
    """Reference value of e^{i pi/4} for cross-checks"""
    return cmath.exp(1j * math.pi / 4)
