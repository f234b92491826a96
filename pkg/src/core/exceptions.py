from typing import Optional


class PathRuleError(Exception):
    """Base class for every error raised by the miner."""

    exit_code: int = 1


class ConfigError(PathRuleError):
    """Invalid mining options (threshold, length, factors, thread count)."""


class UsageError(PathRuleError):
    """Malformed command line."""


class OracleGuardError(PathRuleError):
    """Instance too large for exhaustive enumeration."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


class GraphFormatError(PathRuleError):
    """Malformed vertex or edge file."""

    exit_code = 2

    def __init__(self, message: str, source: str = "<stream>", line_number: Optional[int] = None):
        location = f"{source}:{line_number}" if line_number is not None else source
        super().__init__(f"{location}: {message}")
        self.source = source
        self.line_number = line_number


class RuleFormatError(PathRuleError):
    """Malformed rule line in a JSON-lines rule file."""

    exit_code = 2

    def __init__(self, message: str, line_number: Optional[int] = None, field: Optional[str] = None):
        prefix = f"line {line_number}" if line_number is not None else "rule"
        if field:
            prefix = f"{prefix}, field '{field}'"
        super().__init__(f"{prefix}: {message}")
        self.line_number = line_number
        self.field = field


class PatternFormatError(PathRuleError):
    """Pattern text that does not follow the canonical form."""

    exit_code = 2
