"""Exception types shared across the package."""


class HiddenTopkError(Exception):
    """Base class for all hidden-topk errors."""


class IdRangeError(HiddenTopkError, ValueError):
    """A vertex id is outside [0, n) for its side."""


class ConfigError(HiddenTopkError, ValueError):
    """Invalid algorithm or generator configuration."""


class ReprobedPairError(HiddenTopkError):
    """Audit mode detected the same (b, w) pair probed twice in one run."""


class DatasetError(HiddenTopkError):
    """Dataset file missing, malformed, or inconsistent with its manifest."""


class InvariantViolation(HiddenTopkError):
    """A result or record failed a correctness invariant check."""


class RoundExecutionError(HiddenTopkError):
    """A per-vertex routine raised during a parallel round."""
