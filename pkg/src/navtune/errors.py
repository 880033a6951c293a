"""Exception types shared across the package."""


class NavtuneError(Exception):
    """Base class for all package errors."""


class SchemaError(NavtuneError):
    """Planner family or vector layout does not match the expected schema."""


class RangeError(NavtuneError):
    """A normalized component lies outside [0, 1] beyond tolerance."""


class ConfigError(NavtuneError):
    """Invalid or inconsistent configuration input."""


class TrappedError(NavtuneError):
    """No admissible velocity sample exists; caller decides on recovery."""


class OptimizationError(NavtuneError):
    """Trajectory optimization hit a non-finite cost."""


class TrainingError(NavtuneError):
    """Model training diverged or received an unusable batch."""


class EmptyWindowError(NavtuneError):
    """A condition window has zero valid slots; hold last hyperparameters."""


class DatasetError(NavtuneError):
    """Dataset file is malformed or inconsistent."""
