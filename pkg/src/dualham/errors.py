"""Exception hierarchy shared by every module."""


class DualHamError(Exception):
    """Base class for all errors raised by dualham."""


class GraphError(DualHamError, ValueError):
    """Malformed graph input or a violated structural precondition."""


class ColoringError(DualHamError, ValueError):
    """A coloring that does not fit its graph, or is not hamiltonian where required."""


class QuartetError(DualHamError, ValueError):
    """A quartet whose four vertices are not pairwise distinct valid ids."""


class LiftError(DualHamError, ValueError):
    """Bad arguments to a lift (root or target is not a suitable leaf)."""


class VerificationError(DualHamError, RuntimeError):
    """A constructed instance failed re-verification.

    This always signals a bug in a constructor: nothing unverified is ever
    handed back to the caller.
    """


class BudgetExceeded(DualHamError):
    """Raised internally when a search exhausts its node or time budget."""
