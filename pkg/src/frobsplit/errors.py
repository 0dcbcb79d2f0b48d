"""Exception hierarchy shared across the package.

CLI exit codes are attached where an error class corresponds to a
documented exit status (see cli.py).
"""


class FrobsplitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FrobsplitError):
    """Malformed user input: syntax errors, composite p, unknown variables.

    ``position`` is a character offset into the offending text when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class RingMismatchError(FrobsplitError):
    """Operands belong to different polynomial rings."""


class BudgetExceededError(FrobsplitError):
    """A configured resource cap was hit; the result was not truncated."""


class NotASplittingError(FrobsplitError):
    """The candidate polynomial does not define a Frobenius splitting.

    Carries the offending trace value so callers can report it.
    """

    def __init__(self, trace):
        super().__init__(f"trace of candidate is {trace}, expected 1")
        self.trace = trace


class NotConstructibleError(FrobsplitError):
    """No splitting compatible with the hypersurface was found in the search box."""


class UnsupportedIdealError(FrobsplitError):
    """Minimal-prime decomposition fell outside the supported capability envelope.

    Carries the offending ideal for triage; never a silent wrong answer.
    """

    def __init__(self, ideal, reason):
        super().__init__(f"cannot decompose {ideal}: {reason}")
        self.ideal = ideal
        self.reason = reason


class KernelInconsistencyError(FrobsplitError):
    """Two provably equivalent computations disagreed: an internal bug."""


class VerificationFailedError(FrobsplitError):
    """The post-enumeration verification pass found a failing check."""

    def __init__(self, report):
        failing = [c.name for c in report.checks if not c.passed]
        super().__init__(f"lattice verification failed: {', '.join(failing)}")
        self.report = report
