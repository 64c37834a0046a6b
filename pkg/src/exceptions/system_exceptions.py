class SystemException(Exception):
    """시스템 관련 기본 예외"""
    def __init__(self, message: str, code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}


class ConfigurationException(SystemException):
    """설정 오류"""
    def __init__(self, message: str, config_key: str = None):
        super().__init__(message, code="CONFIG_ERROR")
        if config_key:
            self.details['config_key'] = config_key


class PreludeLoadException(SystemException):
    """프렐류드 로딩 오류"""
    def __init__(self, path: str, message: str):
        full_message = f"Failed to load prelude {path}: {message}"
        super().__init__(full_message, code="PRELUDE_ERROR")
        self.details['path'] = path


class SuiteFailureException(SystemException):
    """검증 스위트 실패"""
    def __init__(self, failures: int, suites: list = None):
        super().__init__(f"{failures} property check(s) failed", code="SUITE_FAILURE")
        self.details['failures'] = failures
        if suites:
            self.details['suites'] = list(suites)
