from .error_handler import (
    ErrorHandler,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_FUEL_EXHAUSTED,
    EXIT_SUITE_FAILURE
)

__all__ = ['ErrorHandler', 'EXIT_OK', 'EXIT_USAGE', 'EXIT_FUEL_EXHAUSTED', 'EXIT_SUITE_FAILURE']
