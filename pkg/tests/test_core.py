import math

import pytest
from hypothesis import given, strategies as st

from phasegrover import (
    DomainError,
    NormalizationError,
    ProblemConfig,
    custom_initial_state,
    rotation_angle,
    uniform_initial_state,
)


@pytest.mark.parametrize(
    "n, psi, cos_psi, sin_psi",
    [
        (4, math.pi / 3, 0.5, math.sqrt(3) / 2),
        (100, None, 0.98, 2 * math.sqrt(99) / 100),
        (2, math.pi / 2, 0.0, 1.0),
    ],
)
def test_rotation_angle_examples(n, psi, cos_psi, sin_psi):
    r = rotation_angle(n)
    if psi is not None:
        assert r.psi == pytest.approx(psi, abs=1e-15)
    assert r.cos_psi == pytest.approx(cos_psi, abs=1e-16)
    assert r.sin_psi == pytest.approx(sin_psi, abs=1e-16)


def test_rotation_angle_n100_sin():
    assert rotation_angle(100).sin_psi == pytest.approx(0.1989975, abs=1e-7)


@given(st.integers(min_value=2, max_value=2**62))
def test_rotation_angle_invariants(n):
    r = rotation_angle(n)
    assert abs(r.cos_psi**2 + r.sin_psi**2 - 1) < 1e-14
    assert abs(math.cos(r.psi) - (n - 2) / n) < 1e-14
    assert r.sin_psi >= 0


@pytest.mark.parametrize("n", [1, 0, -3])
def test_rotation_angle_rejects_small_n(n):
    with pytest.raises(DomainError):
        rotation_angle(n)


def test_uniform_state_examples():
    s = uniform_initial_state(100)
    assert s.b == pytest.approx(0.1, abs=1e-16)
    assert s.a.real == pytest.approx(0.9949874, abs=1e-7)
    s = uniform_initial_state(4)
    assert (s.b, s.a) == pytest.approx((0.5, math.sqrt(3) / 2), abs=1e-16)
    s = uniform_initial_state(2)
    assert s.b == pytest.approx(s.a, abs=1e-16)
    with pytest.raises(DomainError):
        uniform_initial_state(1)


@given(st.integers(min_value=2, max_value=2**62))
def test_uniform_state_passes_normalization_gate(n):
    s = uniform_initial_state(n)
    custom_initial_state(s.b, s.a)


def test_custom_state():
    assert custom_initial_state(1, 0).b == 1
    assert custom_initial_state(0.6, 0.8).a == 0.8
    with pytest.raises(NormalizationError) as info:
        custom_initial_state(0.5, 0.5)
    assert info.value.norm_sq == pytest.approx(0.5)
    assert "0.5" in str(info.value)


def test_config_canonicalizes_theta():
    assert ProblemConfig(10, -math.pi / 2).theta == pytest.approx(3 * math.pi / 2)
    assert ProblemConfig(10, 5 * math.pi).theta == pytest.approx(math.pi)
    assert ProblemConfig(10, -1e-300).theta < 2 * math.pi
    with pytest.raises(DomainError):
        ProblemConfig(10, float("nan"))
    with pytest.raises(DomainError):
        ProblemConfig(10, 1.0, marked=10)
    with pytest.raises(DomainError):
        ProblemConfig(1, 1.0)


@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_theta_in_range(theta):
    t = ProblemConfig(5, theta).theta
    assert 0 <= t < 2 * math.pi
    assert abs(complex(math.cos(t), math.sin(t)) - complex(math.cos(theta), math.sin(theta))) < 1e-9
