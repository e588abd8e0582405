"""Exception hierarchy for the gmk package.

Everything raised on purpose derives from :class:`GmkError`, so callers
(including the CLI) can catch one type for "bad input" handling.
"""


class GmkError(Exception):
    """Base class for all gmk errors."""


class NotDoubleOccurrence(GmkError, ValueError):
    """A label of the input word does not occur exactly twice."""


class UnknownChord(GmkError, ValueError):
    """A chord label is not present in the diagram."""


class LimitExceeded(GmkError, ValueError):
    """A size cap was exceeded (override with the GMK_MAX_N variable)."""


class NotSymmetric(GmkError, ValueError):
    """A matrix expected to be symmetric is not."""


class NonzeroDiagonal(GmkError, ValueError):
    """A matrix expected to have a zero diagonal has a 1 on it."""


class IsolatedChordError(GmkError, ValueError):
    """Strict mode rejected a diagram containing a chord nothing crosses."""


class InvalidInversionSet(GmkError, ValueError):
    """A pair set does not come from any permutation."""


class InvalidN(GmkError, ValueError):
    """A meander size must be a positive even integer."""


class ParityViolation(GmkError, ValueError):
    """A tableau row choice does not alternate parity (first pick is odd)."""


class AlreadyChosen(GmkError, ValueError):
    """A tableau row was already chosen (row 0 is pre-filled)."""


class NotMeanderMatrix(GmkError, ValueError):
    """A matrix failed the meander-matrix conditions."""


class ReconstructionInconsistent(GmkError, ValueError):
    """A matrix passed the predicate but yields no consistent meander."""
