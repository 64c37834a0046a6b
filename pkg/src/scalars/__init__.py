"""Exact scalar arithmetic"""

from .base import Scalar
from .qi_sqrt2 import ExactScalar, omega8_complex
from .rational import RationalScalar
from .domains import ScalarDomains


def zero() -> ExactScalar:
    return ExactScalar.zero()


def one() -> ExactScalar:
    return ExactScalar.one()


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_neg(x: Scalar) -> Scalar:
    return -x


def scalar_sub(x: Scalar, y: Scalar) -> Scalar:
    return x - y


def scalar_div(x: Scalar, y: Scalar) -> Scalar:
    return x / y


def is_zero(x: Scalar) -> bool:
    return x.is_zero()


def is_one(x: Scalar) -> bool:
    return x.is_one()


def to_complex(x: Scalar) -> complex:
    """The floating-point evaluation map"""
    return x.to_complex()


def format_scalar(x: Scalar) -> str:
    return x.format()


__all__ = [
    'Scalar',
    'ExactScalar',
    'RationalScalar',
    'ScalarDomains',
    'omega8_complex',
    'zero',
    'one',
    'scalar_add',
    'scalar_mul',
    'scalar_neg',
    'scalar_sub',
    'scalar_div',
    'is_zero',
    'is_one',
    'to_complex',
    'format_scalar',
]
