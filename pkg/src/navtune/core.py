"""Hyperparameter schemas and min-max normalization.

Both planner families expose nine tunable values in physical units.  All
learning and generation happens in normalized [0, 1] coordinates; these
helpers convert between the two and enforce the vector layout.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping

from .errors import ConfigError, RangeError, SchemaError

N_PARAMS = 9

TEB_PARAM_NAMES = (
    "max_vel_x",
    "max_vel_theta",
    "acc_lim_x",
    "acc_lim_theta",
    "weight_max_vel_x",
    "weight_acc_lim_x",
    "weight_acc_lim_theta",
    "weight_optimaltime",
    "inflation_radius",
)

DWA_PARAM_NAMES = (
    "max_vel_x",
    "max_vel_theta",
    "acc_lim_x",
    "acc_lim_theta",
    "path_distance_bias",
    "goal_distance_bias",
    "occdist_scale",
    "forward_point_distance",
    "inflation_radius",
)

# Dimensions that must stay strictly positive (velocities, accelerations,
# the inflation radius).
_POSITIVE_IDX = (0, 1, 2, 3, 8)


class PlannerFamily(str, Enum):
    DWA = "dwa"
    TEB = "teb"


def param_names(family: PlannerFamily) -> tuple[str, ...]:
    return DWA_PARAM_NAMES if family is PlannerFamily.DWA else TEB_PARAM_NAMES


# Default expert bounds.  The source material never states the ranges the
# experts tuned within, so these bracket stock ROS defaults; override via
# a JSON config where needed.
_DEFAULT_BOUNDS = {
    "max_vel_x": (0.2, 1.2),
    "max_vel_theta": (0.3, 1.5),
    "acc_lim_x": (0.2, 1.5),
    "acc_lim_theta": (0.3, 2.0),
    "weight_max_vel_x": (0.5, 3.0),
    "weight_acc_lim_x": (0.5, 3.0),
    "weight_acc_lim_theta": (0.5, 3.0),
    "weight_optimaltime": (0.5, 5.0),
    "path_distance_bias": (10.0, 50.0),
    "goal_distance_bias": (10.0, 40.0),
    "occdist_scale": (0.005, 0.1),
    "forward_point_distance": (0.1, 0.6),
    "inflation_radius": (0.2, 0.8),
}


@dataclass(frozen=True)
class HyperparamVector:
    """Nine planner hyperparameters in physical units."""

    family: PlannerFamily
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != N_PARAMS:
            raise SchemaError(f"expected {N_PARAMS} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        for i, v in enumerate(self.values):
            if not math.isfinite(v):
                raise SchemaError(f"{param_names(self.family)[i]} is not finite")
        for i in _POSITIVE_IDX:
            if self.values[i] <= 0.0:
                raise SchemaError(f"{param_names(self.family)[i]} must be > 0")

    def __getitem__(self, name: str) -> float:
        return self.values[param_names(self.family).index(name)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(param_names(self.family), self.values))


@dataclass(frozen=True)
class NormalizationSpec:
    """Per-dimension (lo, hi) bounds, ordered like the family's parameters."""

    family: PlannerFamily
    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __post_init__(self):
        if len(self.lo) != N_PARAMS or len(self.hi) != N_PARAMS:
            raise SchemaError("bounds must have 9 entries each")
        object.__setattr__(self, "lo", tuple(float(v) for v in self.lo))
        object.__setattr__(self, "hi", tuple(float(v) for v in self.hi))
        for i, (a, b) in enumerate(zip(self.lo, self.hi)):
            if not (a < b):
                raise ConfigError(
                    f"bound lo < hi violated for {param_names(self.family)[i]}"
                )

    @classmethod
    def default(cls, family: PlannerFamily) -> "NormalizationSpec":
        names = param_names(family)
        lo = tuple(_DEFAULT_BOUNDS[n][0] for n in names)
        hi = tuple(_DEFAULT_BOUNDS[n][1] for n in names)
        return cls(family, lo, hi)

    @classmethod
    def from_json(cls, path: str | Path, family: PlannerFamily) -> "NormalizationSpec":
        """Load bounds from a JSON file keyed by hyperparameter name.

        Missing keys fall back to the defaults.
        """
        raw = json.loads(Path(path).read_text())
        if not isinstance(raw, dict):
            raise ConfigError("bounds file must be a JSON object")
        names = param_names(family)
        lo, hi = [], []
        for n in names:
            pair = raw.get(n, _DEFAULT_BOUNDS[n])
            if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                raise ConfigError(f"bounds for {n} must be a [lo, hi] pair")
            lo.append(float(pair[0]))
            hi.append(float(pair[1]))
        return cls(family, tuple(lo), tuple(hi))

    def with_overrides(
        self, overrides: Mapping[str, tuple[float, float]]
    ) -> "NormalizationSpec":
        names = param_names(self.family)
        unknown = set(overrides) - set(names)
        if unknown:
            raise ConfigError(f"unknown hyperparameters: {sorted(unknown)}")
        lo = list(self.lo)
        hi = list(self.hi)
        for n, (a, b) in overrides.items():
            i = names.index(n)
            lo[i], hi[i] = float(a), float(b)
        return NormalizationSpec(self.family, tuple(lo), tuple(hi))


@dataclass(frozen=True)
class NormalizedHyperparams:
    """The nine hyperparameters mapped to [0, 1]."""

    family: PlannerFamily
    u: tuple[float, ...]

    def __post_init__(self):
        if len(self.u) != N_PARAMS:
            raise SchemaError(f"expected {N_PARAMS} components, got {len(self.u)}")
        object.__setattr__(self, "u", tuple(float(v) for v in self.u))


def _check_family(a, b) -> None:
    if a.family is not b.family:
        raise SchemaError(f"family mismatch: {a.family.value} vs {b.family.value}")


def normalize(h: HyperparamVector, spec: NormalizationSpec) -> NormalizedHyperparams:
    """Min-max scale ``h`` into [0, 1] per dimension.

    Out-of-range inputs are clamped with a warning rather than rejected:
    live generation must never halt navigation.
    """
    _check_family(h, spec)
    u = []
    for i, v in enumerate(h.values):
        lo, hi = spec.lo[i], spec.hi[i]
        if v < lo or v > hi:
            warnings.warn(
                f"{param_names(h.family)[i]}={v} outside [{lo}, {hi}]; clamped",
                RuntimeWarning,
                stacklevel=2,
            )
            v = min(max(v, lo), hi)
        u.append((v - lo) / (hi - lo))
    return NormalizedHyperparams(h.family, tuple(u))


def denormalize(u: NormalizedHyperparams, spec: NormalizationSpec) -> HyperparamVector:
    """Exact inverse of :func:`normalize`; rejects components outside [0, 1]."""
    _check_family(u, spec)
    vals = []
    for i, x in enumerate(u.u):
        if x < -1e-9 or x > 1.0 + 1e-9:
            raise RangeError(
                f"component {param_names(u.family)[i]}={x} outside [0, 1]"
            )
        x = min(max(x, 0.0), 1.0)
        vals.append(spec.lo[i] + x * (spec.hi[i] - spec.lo[i]))
    return HyperparamVector(u.family, tuple(vals))


def user_remap(
    u: NormalizedHyperparams,
    expert_spec: NormalizationSpec,
    user_bounds: Mapping[str, tuple[float, float]],
) -> HyperparamVector:
    """Denormalize with user-preferred ranges on selected dimensions.

    The model learns relative intent in [0, 1]; remapping the user-adjustable
    dimensions (e.g. max_vel_x) onto personal bounds keeps that intent while
    respecting the user's comfort envelope.  Non-user dimensions keep the
    expert bounds.
    """
    return denormalize(u, expert_spec.with_overrides(user_bounds))
