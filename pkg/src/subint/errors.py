"""Exception hierarchy shared by every module."""


class SubintError(Exception):
    """Base class; `exit_code` is used by the CLI."""

    exit_code = 1


class DivisionByZero(SubintError, ZeroDivisionError):
    pass


class FieldMismatch(SubintError):
    pass


class AlgebraError(SubintError):
    """Structure constants fail commutativity/associativity/unity checks."""


class TruncationOverflow(SubintError):
    pass


class NotAUnit(SubintError):
    pass


class NonBirational(SubintError):
    pass


class UnsupportedSearch(SubintError):
    exit_code = 3


class InexpressibleCokernel(SubintError):
    exit_code = 3


class HypothesisNotVerified(SubintError):
    exit_code = 3


class CertificateFailure(SubintError):
    pass


class BadWitness(SubintError):
    pass


class CutoffExceeded(SubintError):
    """A brute-force search would exceed the configured enumeration cutoff."""

    exit_code = 3


class ExactnessFailure(SubintError):
    pass


class NotSurjectiveWitness(SubintError):
    pass


class ParseError(SubintError):
    """Script syntax error; ``line`` and ``col`` are 1-based."""

    exit_code = 2

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line, self.col = line, col
        super().__init__(f"line {line}, col {col}: {message}" if line else message)


class UndefinedName(ParseError):
    pass


class DuplicateName(ParseError):
    pass
