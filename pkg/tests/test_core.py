import numpy as np
import pytest

from navtune.core import (
    HyperparamVector,
    NormalizationSpec,
    NormalizedHyperparams,
    PlannerFamily,
    denormalize,
    normalize,
    param_names,
    user_remap,
)
from navtune.errors import ConfigError, RangeError, SchemaError


def _vec(family, **overrides):
    spec = NormalizationSpec.default(family)
    vals = [(a + b) / 2 for a, b in zip(spec.lo, spec.hi)]
    names = param_names(family)
    for k, v in overrides.items():
        vals[names.index(k)] = v
    return HyperparamVector(family, tuple(vals))


def test_normalize_midpoint():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    h = _vec(PlannerFamily.TEB, max_vel_x=0.6)
    spec = spec.with_overrides({"max_vel_x": (0.2, 1.0)})
    u = normalize(h, spec)
    assert u.u[0] == pytest.approx(0.5)


def test_normalize_boundaries():
    spec = NormalizationSpec.default(PlannerFamily.DWA)
    lo_vec = HyperparamVector(PlannerFamily.DWA, spec.lo)
    hi_vec = HyperparamVector(PlannerFamily.DWA, spec.hi)
    assert normalize(lo_vec, spec).u == tuple([0.0] * 9)
    assert normalize(hi_vec, spec).u == tuple([1.0] * 9)


def test_round_trip_identity():
    rng = np.random.default_rng(7)
    for family in PlannerFamily:
        spec = NormalizationSpec.default(family)
        for _ in range(100):
            vals = tuple(
                lo + rng.random() * (hi - lo) for lo, hi in zip(spec.lo, spec.hi)
            )
            h = HyperparamVector(family, vals)
            back = denormalize(normalize(h, spec), spec)
            np.testing.assert_allclose(back.values, h.values, rtol=0, atol=1e-12)


def test_normalize_monotone_per_dimension():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    a = _vec(PlannerFamily.TEB, max_vel_x=0.5)
    b = _vec(PlannerFamily.TEB, max_vel_x=0.9)
    assert normalize(a, spec).u[0] < normalize(b, spec).u[0]


def test_normalize_clamps_with_warning():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    h = _vec(PlannerFamily.TEB, max_vel_x=5.0)
    with pytest.warns(RuntimeWarning):
        u = normalize(h, spec)
    assert u.u[0] == 1.0


def test_family_mismatch_is_schema_error():
    spec = NormalizationSpec.default(PlannerFamily.DWA)
    h = _vec(PlannerFamily.TEB)
    with pytest.raises(SchemaError):
        normalize(h, spec)


def test_denormalize_endpoints():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    zeros = NormalizedHyperparams(PlannerFamily.TEB, tuple([0.0] * 9))
    ones = NormalizedHyperparams(PlannerFamily.TEB, tuple([1.0] * 9))
    assert denormalize(zeros, spec).values == spec.lo
    assert denormalize(ones, spec).values == spec.hi


def test_denormalize_midpoint_uniform_spec():
    spec = NormalizationSpec(PlannerFamily.TEB, tuple([0.0] * 9), tuple([2.0] * 9))
    u = NormalizedHyperparams(PlannerFamily.TEB, tuple([0.5] * 9))
    assert denormalize(u, spec).values == tuple([1.0] * 9)


def test_denormalize_range_error():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    u = NormalizedHyperparams(PlannerFamily.TEB, (1.1,) + tuple([0.5] * 8))
    with pytest.raises(RangeError):
        denormalize(u, spec)


def test_denormalize_tolerates_1e9_slack():
    spec = NormalizationSpec.default(PlannerFamily.TEB)
    u = NormalizedHyperparams(PlannerFamily.TEB, (1.0 + 5e-10,) + tuple([0.5] * 8))
    assert denormalize(u, spec).values[0] == spec.hi[0]


def test_user_remap_max_vel():
    spec = NormalizationSpec.default(PlannerFamily.DWA)
    u = NormalizedHyperparams(PlannerFamily.DWA, (1.0,) + tuple([0.5] * 8))
    h = user_remap(u, spec, {"max_vel_x": (0.1, 0.5)})
    assert h["max_vel_x"] == pytest.approx(0.5)
    u0 = NormalizedHyperparams(PlannerFamily.DWA, (0.0,) + tuple([0.5] * 8))
    assert user_remap(u0, spec, {"max_vel_x": (0.1, 0.5)})["max_vel_x"] == pytest.approx(0.1)


def test_user_remap_ordered_like_bounds():
    spec = NormalizationSpec.default(PlannerFamily.DWA)
    u = NormalizedHyperparams(PlannerFamily.DWA, (0.7,) + tuple([0.5] * 8))
    slow = user_remap(u, spec, {"max_vel_x": (0.2, 0.6)})
    fast = user_remap(u, spec, {"max_vel_x": (0.4, 1.2)})
    assert slow["max_vel_x"] < fast["max_vel_x"]


def test_user_remap_keeps_expert_bounds_elsewhere():
    spec = NormalizationSpec.default(PlannerFamily.DWA)
    u = NormalizedHyperparams(PlannerFamily.DWA, tuple([0.5] * 9))
    h = user_remap(u, spec, {"max_vel_x": (0.1, 0.3)})
    ref = denormalize(u, spec)
    assert h.values[1:] == ref.values[1:]


def test_vector_validation():
    with pytest.raises(SchemaError):
        HyperparamVector(PlannerFamily.TEB, (0.0,) * 9)  # zero velocity
    with pytest.raises(SchemaError):
        HyperparamVector(PlannerFamily.TEB, (float("nan"),) + (1.0,) * 8)
    with pytest.raises(ConfigError):
        NormalizationSpec(PlannerFamily.TEB, tuple([1.0] * 9), tuple([1.0] * 9))
