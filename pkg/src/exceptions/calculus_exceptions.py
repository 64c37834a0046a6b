from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets plus 1-based line/column of a source fragment"""
    start: int
    end: int
    line: int = 1
    column: int = 1

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"Span start {self.start} is after end {self.end}")

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class CalculusException(Exception):
    """Base for errors raised by the calculus itself"""
    def __init__(self, message: str, code: str = None, details: dict = None):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}


class ParseError(CalculusException):
    """Malformed surface syntax"""
    def __init__(self, message: str, span: SourceSpan = None, code: str = "PARSE_ERROR"):
        if not message:
            raise ValueError("ParseError needs a message")
        super().__init__(message, code=code)
        self.span = span or SourceSpan(0, 0)
        self.details['span'] = {
            'start': self.span.start,
            'end': self.span.end,
            'line': self.span.line,
            'column': self.span.column,
        }

    def __str__(self) -> str:
        return f"{self.span}: {self.message}"


class UnknownIdentifierError(ParseError):
    """Identifier neither lambda-bound nor defined by a binding"""
    def __init__(self, name: str, span: SourceSpan = None):
        super().__init__(f"Unknown identifier '{name}'", span, code="UNKNOWN_IDENTIFIER")
        self.details['name'] = name


class DuplicateBindingError(ParseError):
    """A let-binding reuses a name"""
    def __init__(self, name: str, span: SourceSpan = None):
        super().__init__(f"Duplicate binding '{name}'", span, code="DUPLICATE_BINDING")
        self.details['name'] = name


class OpenBindingError(ParseError):
    """A let-binding has free variables"""
    def __init__(self, name: str, free: set, span: SourceSpan = None):
        listed = ', '.join(sorted(free))
        super().__init__(f"Binding '{name}' is not closed (free: {listed})", span,
                         code="OPEN_BINDING")
        self.details['name'] = name
        self.details['free'] = sorted(free)


class InvalidRedexError(CalculusException):
    """A redex does not match the term it is applied to"""
    def __init__(self, message: str, redex=None):
        super().__init__(message, code="INVALID_REDEX")
        if redex is not None:
            self.details['redex'] = str(redex)


class ScalarDomainError(CalculusException):
    """Scalar operation outside what the active domain supports"""
    def __init__(self, message: str, domain: str = None):
        super().__init__(message, code="SCALAR_DOMAIN")
        if domain:
            self.details['domain'] = domain
