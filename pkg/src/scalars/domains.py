"""
Scalar domain registry
"""

from typing import Dict, List, Type

from .base import Scalar
from .qi_sqrt2 import ExactScalar
from .rational import RationalScalar
from ..logger import get_logger

logger = get_logger('scalar_domains')


class ScalarDomains:
    """Factory for the shipped scalar domains"""

    DOMAINS: Dict[str, Type[Scalar]] = {
        'qi_sqrt2': ExactScalar,
        'rational': RationalScalar,
    }

    DEFAULT = 'qi_sqrt2'

    @classmethod
    def get(cls, name: str = None) -> Type[Scalar]:
        """
        Look up a scalar domain class

        Raises:
            ValueError: If the domain name is unknown
        """
        name = name or cls.DEFAULT
        if name not in cls.DOMAINS:
            raise ValueError(f"Unknown scalar domain: {name}. "
                             f"Available: {list(cls.DOMAINS.keys())}")
        return cls.DOMAINS[name]

    @classmethod
    def available(cls) -> List[str]:
        return list(cls.DOMAINS.keys())
