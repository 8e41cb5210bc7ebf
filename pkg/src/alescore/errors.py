"""Exception types shared across the engine.

Every error carries a machine-readable ``code`` so the CLI and the HTTP
service can surface failures uniformly.
"""


class EngineError(Exception):
    """Base class for all engine errors."""

    code = "engine_error"

    def __init__(self, message, *, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class StructuralError(EngineError):
    """Input has an impossible shape (non-square matrix, non-positive entry)."""

    code = "structural_error"


class DomainError(EngineError):
    """Argument value outside the operation's domain."""

    code = "domain_error"


class ConvergenceError(EngineError):
    """Iteration failed to converge; carries the last iterate."""

    code = "convergence_error"

    def __init__(self, message, *, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class MissingRandomIndexError(DomainError):
    """No random-index constant for this matrix order and no override given."""

    code = "missing_random_index"


class ProfileError(EngineError):
    """Weight labels and snapshot metric profile disagree."""

    code = "profile_error"


class TemporalError(EngineError):
    """Evaluation date precedes the publication month."""

    code = "temporal_error"


class CohortError(EngineError):
    """Snapshot mixes publication cohorts and no cohort key was supplied."""

    code = "cohort_error"


class AlignmentError(EngineError):
    """Article sets disagree where they must match; carries the difference."""

    code = "alignment_error"

    def __init__(self, message, *, missing=(), extra=()):
        super().__init__(message)
        self.missing = tuple(sorted(missing))
        self.extra = tuple(sorted(extra))


class SchemaError(EngineError):
    """A file or document violates the expected schema."""

    code = "schema_error"
