"""Exception types shared across the package.

Precondition violations (bad tolerances, malformed atoms, out-of-range
arguments) raise plain ``ValueError``/``TypeError``; the classes below mark
outcomes that are only discovered while computing.
"""


class NonConvergenceError(Exception):
    """An iterative scheme exhausted its budget before meeting its tolerance."""


class NotOscillatoryError(Exception):
    """Between-zeros partial integrals failed to alternate in sign."""


class SizeLimitError(Exception):
    """A combinatorial result would exceed the supported size cap."""


class AtomOnGridError(ValueError):
    """A probe grid point coincides with an atom of the limit distribution."""
