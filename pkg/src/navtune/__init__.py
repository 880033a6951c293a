"""Scene-adaptive hyperparameter tuning workbench for 2D local planners."""

from .core import (
    DWA_PARAM_NAMES,
    TEB_PARAM_NAMES,
    HyperparamVector,
    NormalizationSpec,
    NormalizedHyperparams,
    PlannerFamily,
    denormalize,
    normalize,
    user_remap,
)

__version__ = "0.1.0"

__all__ = [
    "DWA_PARAM_NAMES",
    "TEB_PARAM_NAMES",
    "HyperparamVector",
    "NormalizationSpec",
    "NormalizedHyperparams",
    "PlannerFamily",
    "denormalize",
    "normalize",
    "user_remap",
    "__version__",
]
