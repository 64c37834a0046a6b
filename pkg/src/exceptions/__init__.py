from .calculus_exceptions import (
    SourceSpan,
    CalculusException,
    ParseError,
    UnknownIdentifierError,
    DuplicateBindingError,
    OpenBindingError,
    InvalidRedexError,
    ScalarDomainError
)
from .system_exceptions import (
    SystemException,
    ConfigurationException,
    PreludeLoadException,
    SuiteFailureException
)

__all__ = [
    # Calculus Exceptions
    'SourceSpan',
    'CalculusException',
    'ParseError',
    'UnknownIdentifierError',
    'DuplicateBindingError',
    'OpenBindingError',
    'InvalidRedexError',
    'ScalarDomainError',

    # System Exceptions
    'SystemException',
    'ConfigurationException',
    'PreludeLoadException',
    'SuiteFailureException'
]
