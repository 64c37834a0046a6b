"""
Base scalar interface

A scalar domain must behave like a commutative ring with canonical
values: for all x, y, z

    0 + x = x,  0 * x = 0,  1 * x = x,
    x * (y + z) = x*y + x*z,
    + and * associative and commutative,

and two values are equal iff their canonical representations are equal.
Implementations keep every value canonical, so there is nothing left to
rewrite on the scalar side.
"""

from abc import ABC, abstractmethod
from typing import Tuple


class Scalar(ABC):
    """Immutable canonical scalar"""

    domain_name: str = "abstract"

    @abstractmethod
    def __add__(self, other: "Scalar") -> "Scalar":
        pass

    @abstractmethod
    def __mul__(self, other: "Scalar") -> "Scalar":
        pass

    @abstractmethod
    def __neg__(self) -> "Scalar":
        pass

    @abstractmethod
    def inverse(self) -> "Scalar":
        """Multiplicative inverse; raises ScalarDomainError on zero"""
        pass

    @abstractmethod
    def is_zero(self) -> bool:
        pass

    @abstractmethod
    def is_one(self) -> bool:
        pass

    @property
    @abstractmethod
    def key(self) -> Tuple:
        """Total-order key; equal keys iff equal scalars"""
        pass

    @abstractmethod
    def to_complex(self) -> complex:
        """Floating-point evaluation, for sanity checks only"""
        pass

    @abstractmethod
    def format(self) -> str:
        """Surface text that parses back to this value"""
        pass

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar) or other.domain_name != self.domain_name:
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash((self.domain_name, self.key))

    def __lt__(self, other: "Scalar") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return self.format()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** -exponent
        result = self.one_like()
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @abstractmethod
    def zero_like(self) -> "Scalar":
        pass

    @abstractmethod
    def one_like(self) -> "Scalar":
        pass


def format_rational_monomial(coefficient, monomial: str) -> str:
    """Render coefficient * monomial as e.g. 'sqrt2/2', '3*i/4', '-1/2'"""
    numerator = coefficient.numerator
    denominator = coefficient.denominator
    sign = '-' if numerator < 0 else ''
    numerator = abs(numerator)
    if monomial:
        body = monomial if numerator == 1 else f"{numerator}*{monomial}"
    else:
        body = str(numerator)
    if denominator != 1:
        body = f"{body}/{denominator}"
    return f"{sign}{body}"


def join_monomials(parts) -> str:
    """Join signed monomials into 'a + b - c' form"""
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        if part.startswith('-'):
            text += f" - {part[1:]}"
        else:
            text += f" + {part}"
    return text
