import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import dense_diffusion, dense_trajectory
from phasegrover import (
    FullState,
    ProblemConfig,
    ReducedState,
    SizeGuardError,
    SymmetryViolationError,
    apply_diffusion,
    apply_phase_oracle,
    build_iteration_matrix,
    full_iterate,
    iterate,
    lift,
    project,
    step,
    uniform_initial_state,
)
from phasegrover.full import diffusion_matrix


def _random_full(rng, n, marked=0):
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    return FullState(x / np.linalg.norm(x), marked)


@st.composite
def reduced_states(draw):
    v = np.array([draw(st.floats(-1, 1)) for _ in range(4)])
    if np.linalg.norm(v) < 1e-3:
        v = np.array([1.0, 0, 0, 0])
    v = v / np.linalg.norm(v)
    return ReducedState(complex(v[0], v[1]), complex(v[2], v[3]))


def test_lift_examples():
    s = lift(uniform_initial_state(4), ProblemConfig(4, 0.0))
    np.testing.assert_allclose(s.amplitudes, 0.5, atol=1e-15)
    s = lift(ReducedState(1, 0), ProblemConfig(7, 0.0, marked=3))
    np.testing.assert_array_equal(s.amplitudes, np.eye(7)[3])
    s = lift(ReducedState(0.6, 0.8), ProblemConfig(100, 0.0))
    assert s.amplitudes[0] == 0.6
    np.testing.assert_allclose(s.amplitudes[1:], 0.080403, atol=1e-6)


def test_phase_oracle_examples():
    s = FullState([0.5, 0.5, 0.5, 0.5])
    np.testing.assert_allclose(apply_phase_oracle(s, math.pi).amplitudes, [-0.5, 0.5, 0.5, 0.5], atol=1e-16)
    np.testing.assert_array_equal(apply_phase_oracle(s, 0.0).amplitudes, s.amplitudes)
    s = lift(uniform_initial_state(100), ProblemConfig(100, 0.0))
    out = apply_phase_oracle(s, math.pi / 2)
    assert abs(out.amplitudes[0] - 0.1j) < 1e-16
    np.testing.assert_array_equal(out.amplitudes[1:], s.amplitudes[1:])


def test_diffusion_examples():
    out = apply_diffusion(FullState([-0.5, 0.5, 0.5, 0.5]))
    np.testing.assert_allclose(out.amplitudes, [1, 0, 0, 0], atol=1e-15)
    u = FullState(np.full(16, 0.25))
    np.testing.assert_allclose(apply_diffusion(u).amplitudes, u.amplitudes, atol=1e-16)


@pytest.mark.parametrize("n", [2, 3, 17, 64, 1000])
def test_diffusion_involution_and_norm(n):
    rng = np.random.default_rng(n)
    for _ in range(10):
        s = _random_full(rng, n)
        once = apply_diffusion(s)
        assert abs(once.norm_sq - 1) < 1e-13
        assert np.max(np.abs(apply_diffusion(once).amplitudes - s.amplitudes)) < 1e-13


@pytest.mark.parametrize("n", range(2, 65))
def test_diffusion_equals_dense_matrix(n):
    rng = np.random.default_rng(1000 + n)
    s = _random_full(rng, n)
    expected = dense_diffusion(n) @ s.amplitudes
    assert np.max(np.abs(apply_diffusion(s).amplitudes - expected)) < 1e-13
    np.testing.assert_allclose(diffusion_matrix(n), dense_diffusion(n).real, atol=0)


@given(reduced_states(), st.integers(2, 300))
def test_project_lift_roundtrip(s, n):
    r = project(lift(s, ProblemConfig(n, 0.0, marked=n - 1)))
    assert abs(r.b - s.b) < 1e-14 and abs(r.a - s.a) < 1e-14


def test_one_full_iteration_equals_reduced_step():
    for theta in (0.0, 0.7, math.pi / 3, math.pi):
        cfg = ProblemConfig(100, theta)
        init = uniform_initial_state(100)
        full = project(apply_diffusion(apply_phase_oracle(lift(init, cfg), theta)))
        red = step(init, build_iteration_matrix(cfg))
        assert abs(full.b - red.b) < 1e-12 and abs(full.a - red.a) < 1e-12


def test_project_rejects_broken_symmetry():
    amps = lift(uniform_initial_state(10), ProblemConfig(10, 0.0)).amplitudes.copy()
    amps[4] += 1e-6
    with pytest.raises(SymmetryViolationError):
        project(FullState(amps))


def test_full_iterate_examples():
    t = full_iterate(ProblemConfig(4, math.pi), uniform_initial_state(4), 1)
    assert abs(t.b[-1] - 1) < 1e-15 and abs(t.a[-1]) < 1e-15

    cfg = ProblemConfig(100, math.pi / 3)
    full = full_iterate(cfg, uniform_initial_state(100), 100)
    red = iterate(cfg, uniform_initial_state(100), 100)
    assert np.max(np.abs(full.b - red.b)) < 1e-11
    assert np.max(np.abs(full.a - red.a)) < 1e-11

    t = full_iterate(ProblemConfig(1024, math.pi), uniform_initial_state(1024), 25)
    psi = ProblemConfig(1024, math.pi).psi
    assert abs(abs(t.b[25]) - abs(math.sin(25.5 * psi))) < 1e-10


def test_full_iterate_matches_dense_oracle():
    cfg = ProblemConfig(40, 2.2, marked=11)
    t = full_iterate(cfg, ReducedState(0.6, 0.8j), 50)
    b, a = dense_trajectory(40, 2.2, 50, 0.6, 0.8j, marked=11)
    np.testing.assert_allclose(t.b, b, atol=1e-12)
    np.testing.assert_allclose(t.a, a, atol=1e-12)


def test_marked_index_is_irrelevant():
    init = ReducedState(0.3, math.sqrt(0.91))
    ref = full_iterate(ProblemConfig(33, 1.1, marked=0), init, 60)
    for marked in (1, 16, 32):
        t = full_iterate(ProblemConfig(33, 1.1, marked=marked), init, 60)
        np.testing.assert_allclose(t.b, ref.b, atol=1e-13)
        np.testing.assert_allclose(t.a, ref.a, atol=1e-13)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        full_iterate(ProblemConfig(1000, 1.0), uniform_initial_state(1000), 1, max_n=999)


@settings(max_examples=10, deadline=None)
@given(reduced_states(), st.floats(0, 2 * math.pi), st.integers(2, 200))
def test_symmetry_preserved_for_1000_iterations(s, theta, n):
    cfg = ProblemConfig(n, theta, marked=n // 3)
    state = lift(s, cfg)
    others = np.arange(n) != cfg.marked
    for _ in range(1000):
        state = apply_diffusion(apply_phase_oracle(state, theta))
        rest = state.amplitudes[others]
        assert np.max(np.abs(rest - rest.mean())) < 1e-11
