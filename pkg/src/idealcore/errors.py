"""Exception hierarchy shared by all idealcore modules."""


class IdealCoreError(Exception):
    """Base class for all idealcore errors."""


class SpecError(IdealCoreError):
    """Malformed spec file or polynomial expression (CLI exit code 1)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, col {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RingMismatchError(IdealCoreError):
    """Operands live in different rings or carry different term orders."""


class DegreeOverflowError(IdealCoreError):
    """A computation exceeded the hard total-degree cap."""


class NonLocalInputError(IdealCoreError):
    """An ideal fed to a localization-sensitive operation is not m-primary."""


class GenericityError(IdealCoreError):
    """Independently seeded re-runs of a 'general' computation disagreed
    (CLI exit code 3)."""


class TheoremViolationError(IdealCoreError):
    """A computed result contradicts an unconditional theorem; indicates a
    genericity failure or a bug (CLI exit code 2)."""
