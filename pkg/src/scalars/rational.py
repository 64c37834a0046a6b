"""
Plain rational scalars

Smallest domain satisfying the scalar laws; handy in tests where
irrational constants are not needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .base import Scalar, format_rational_monomial
from ..exceptions import ScalarDomainError


@dataclass(frozen=True, eq=False)
class RationalScalar(Scalar):
    """Canonical element of Q"""
    value: Fraction = Fraction(0)

    domain_name = "rational"

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, 'value', Fraction(self.value))

    @classmethod
    def zero(cls) -> "RationalScalar":
        return cls()

    @classmethod
    def one(cls) -> "RationalScalar":
        return cls(Fraction(1))

    @classmethod
    def of(cls, value) -> "RationalScalar":
        return cls(Fraction(value))

    @classmethod
    def constant(cls, name: str) -> "RationalScalar":
        raise ScalarDomainError(f"Constant '{name}' is not rational", cls.domain_name)

    def zero_like(self) -> "RationalScalar":
        return RationalScalar.zero()

    def one_like(self) -> "RationalScalar":
        return RationalScalar.one()

    def __add__(self, other: Scalar) -> "RationalScalar":
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return RationalScalar(self.value + other.value)

    def __mul__(self, other: Scalar) -> "RationalScalar":
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return RationalScalar(self.value * other.value)

    def __neg__(self) -> "RationalScalar":
        return RationalScalar(-self.value)

    def inverse(self) -> "RationalScalar":
        if self.value == 0:
            raise ScalarDomainError("Division by zero", self.domain_name)
        return RationalScalar(1 / self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    @property
    def key(self) -> Tuple[Fraction]:
        return (self.value,)

    def to_complex(self) -> complex:
        return complex(float(self.value))

    def format(self) -> str:
        return format_rational_monomial(self.value, "")

    def __repr__(self) -> str:
        return f"RationalScalar({self.format()})"
