"""Exception types shared across the toolkit.

``InputError`` subclasses map to CLI exit code 2 (bad inputs or
configuration); ``PropertyViolation`` maps to exit code 1 (a verified
invariant failed on otherwise valid inputs).
"""


class ToolkitError(Exception):
    pass


class InputError(ToolkitError):
    pass


class ParseError(InputError):
    pass


class DuplicateKeyError(InputError):
    pass


class DomainError(InputError):
    pass


class CoverageError(InputError):
    pass


class AlignmentError(InputError):
    pass


class ConfigError(InputError):
    pass


class SampleSizeError(InputError):
    pass


class DegenerateDataError(InputError):
    pass


class PropertyViolation(ToolkitError):
    pass
