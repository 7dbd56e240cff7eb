"""Exception hierarchy.

Computational failures (precision, recognition, relation search) are reported
as exceptions and never converted into mathematical claims.
"""


class DPFError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPrime(DPFError, ValueError):
    pass


class DegenerateRadicand(DPFError, ValueError):
    """The radicand is a perfect p-th power, so the field collapses to Q."""


class FactorizationIncomplete(DPFError):
    pass


class ComputationFailure(DPFError):
    """Base for failures of a numerical or search procedure (CLI exit code 3)."""

    code = "COMPUTATION_FAILED"


class PrecisionExhausted(ComputationFailure):
    code = "PRECISION_EXHAUSTED"


class RecognitionFailed(ComputationFailure):
    code = "RECOGNITION_FAILED"


class RelationSearchIncomplete(ComputationFailure):
    code = "RELATION_SEARCH_INCOMPLETE"


class InternalInconsistency(ComputationFailure):
    code = "INTERNAL_INCONSISTENCY"


class InadmissiblePair(ComputationFailure):
    code = "INADMISSIBLE_PAIR"
