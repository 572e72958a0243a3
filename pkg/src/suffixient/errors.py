"""Exception hierarchy shared by every module."""


class SuffixientError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class SentinelInInput(SuffixientError):
    pass


class AlreadyTerminated(SuffixientError):
    pass


class MissingSentinel(SuffixientError):
    pass


class PositionOutOfRange(SuffixientError):
    pass


class SentinelSymbol(SuffixientError):
    pass


class ParameterTooSmall(SuffixientError):
    pass


class OracleCapExceeded(SuffixientError):
    pass


class ConfigError(SuffixientError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
