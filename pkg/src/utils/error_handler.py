import logging
import traceback
from typing import Optional, Callable, Dict, List
from datetime import datetime, timedelta

from src.exceptions import (
    CalculusException, ParseError, InvalidRedexError,
    SystemException, ConfigurationException, SuiteFailureException
)

# Stable process exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FUEL_EXHAUSTED = 2
EXIT_SUITE_FAILURE = 3


class ErrorHandler:
    """중앙 집중식 에러 처리"""

    def __init__(self, logger: Optional[logging.Logger] = None, history_limit: int = 200):
        self.logger = logger or logging.getLogger(__name__)
        self.error_callbacks: Dict[type, Callable] = {}
        self.error_history: List[dict] = []
        self.history_limit = history_limit

    def register_callback(self, exception_type: type, callback: Callable):
        """특정 예외 타입에 대한 콜백 등록"""
        self.error_callbacks[exception_type] = callback

    def handle_error(self, error: Exception, context: dict = None) -> int:
        """
        에러를 기록하고 종료 코드로 변환

        Returns:
            int: the process exit code the error maps to
        """
        context = context or {}

        error_info = {
            'timestamp': datetime.now(),
            'type': type(error).__name__,
            'message': str(error),
            'context': context,
            'traceback': traceback.format_exc()
        }
        self.error_history.append(error_info)
        if len(self.error_history) > self.history_limit:
            self.error_history = self.error_history[-self.history_limit:]

        exit_code = self._handle_specific_error(error, context)

        for exc_type, callback in self.error_callbacks.items():
            if isinstance(error, exc_type):
                try:
                    callback(error, context)
                except Exception as cb_error:
                    self.logger.error(f"Error in callback: {cb_error}")

        return exit_code

    def _handle_specific_error(self, error: Exception, context: dict) -> int:
        """에러 타입별 특수 처리"""

        # Parse errors are user input problems
        if isinstance(error, ParseError):
            self.logger.debug(f"Parse error at {error.span}: {error.message}")
            return EXIT_USAGE

        # Engine bug
        elif isinstance(error, InvalidRedexError):
            self.logger.critical(f"Invalid redex: {error.message} {error.details}")
            return EXIT_USAGE

        elif isinstance(error, CalculusException):
            self.logger.error(f"Calculus error: {error.code} - {error.message}")
            return EXIT_USAGE

        elif isinstance(error, SuiteFailureException):
            self.logger.error(f"Suite failure: {error.details}")
            return EXIT_SUITE_FAILURE

        elif isinstance(error, ConfigurationException):
            self.logger.error(f"Configuration error: {error.message} {error.details}")
            return EXIT_USAGE

        elif isinstance(error, SystemException):
            self.logger.critical(f"System error: {error.code} - {error.message}")
            return EXIT_USAGE

        elif isinstance(error, (OSError, ValueError)):
            self.logger.error(f"{type(error).__name__}: {error}")
            return EXIT_USAGE

        else:
            self.logger.exception(f"Unexpected error: {error}")
            return EXIT_USAGE

    def get_error_summary(self, hours: int = 24) -> dict:
        """최근 N시간 동안의 에러 요약"""
        cutoff_time = datetime.now() - timedelta(hours=hours)

        recent_errors = [
            e for e in self.error_history
            if e['timestamp'] > cutoff_time
        ]

        error_counts = {}
        for error in recent_errors:
            error_type = error['type']
            error_counts[error_type] = error_counts.get(error_type, 0) + 1

        return {
            'total_errors': len(recent_errors),
            'error_counts': error_counts,
            'most_recent': recent_errors[-1] if recent_errors else None
        }
