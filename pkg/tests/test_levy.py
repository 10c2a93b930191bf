"""Tests seedable randomness and Lévy step sampling."""

import math

import numpy as np
import pytest

from hypothesis import given, strategies as st

import lfa
from lfa.levy import LevyConfig, RngState, levy_perturbation, levy_step, levy_steps, \
    uniform_in_bounds

import test
from test import ScriptedRng
test.init(globals())


def test_levy_step_inverse_cdf(test):
    """Tests the closed-form step values for forced uniform draws."""

    assert levy_step(LevyConfig(2, 1), ScriptedRng(0.0)) == 1.0
    assert levy_step(LevyConfig(2, 1), ScriptedRng(0.5)) == 2.0
    assert levy_step(LevyConfig(1.5, 1), ScriptedRng(0.75)) == 16.0
    assert levy_step(LevyConfig(2, 0.5), ScriptedRng(0.5)) == 1.0


def test_levy_step_cap(test):
    """Tests clipping of extreme draws."""

    cfg = LevyConfig(1.5, 2.0)
    assert cfg.cap == 2e6
    assert levy_step(cfg, ScriptedRng(1 - 1e-15)) == cfg.cap


def test_invalid_levy_config(test):
    """Tests rejection of invalid step laws."""

    for lam, t_min in ((1, 1), (0.5, 1), (3.5, 1), (2, 0), (2, -1), ("2", 1)):
        with pytest.raises(lfa.InvalidArgument):
            LevyConfig(lam, t_min)

    LevyConfig(3, 1e-9)


def test_invalid_seed(test):
    """Tests rejection of invalid seeds."""

    for seed in (-1, 2 ** 64, 1.5, True, "1"):
        with pytest.raises(lfa.InvalidArgument):
            RngState(seed)

    assert RngState(2 ** 64 - 1).seed() == 2 ** 64 - 1


@given(st.integers(min_value=0, max_value=2 ** 64 - 1))
def test_determinism(seed):
    """Tests that identical seeds produce identical sequences."""

    cfg = LevyConfig(1.5, 1)
    first, second = RngState(seed), RngState(seed)

    assert np.array_equal(levy_steps(cfg, first, 16), levy_steps(cfg, second, 16))
    assert np.array_equal(
        levy_perturbation(3, 0.2, [1, 2, 3], cfg, first),
        levy_perturbation(3, 0.2, [1, 2, 3], cfg, second))
    assert np.array_equal(
        uniform_in_bounds([-1, 0], [1, 5], first),
        uniform_in_bounds([-1, 0], [1, 5], second))


def test_support(test):
    """Tests that every step is at least t_min."""

    rng = RngState(1)

    for lam in (1.01, 1.5, 2, 3):
        for t_min in (1e-3, 1, 7.5):
            assert np.all(levy_steps(LevyConfig(lam, t_min), rng, 10000) >= t_min)


def test_median(test):
    """Tests the empirical median against the analytic one (2 for lam = 2)."""

    steps = levy_steps(LevyConfig(2, 1), RngState(7), 10 ** 5)
    assert abs(np.median(steps) - 2) <= 0.05 * 2


def test_tail(test):
    """Tests the survival function P(t > x) = x ** -(lam - 1)."""

    count = 10 ** 5
    steps = levy_steps(LevyConfig(1.5, 1), RngState(11), count)

    for x in (4, 16, 64):
        expected = x ** -0.5
        standard_error = math.sqrt(expected * (1 - expected) / count)
        assert abs(np.mean(steps > x) - expected) <= 3 * standard_error


def test_perturbation(test):
    """Tests Lévy perturbation composition."""

    cfg = LevyConfig(2, 1)

    assert np.array_equal(levy_perturbation(4, 0, np.ones(4), cfg, RngState(0)), np.zeros(4))
    assert levy_perturbation(1, 1, [1], cfg, ScriptedRng(0.9, 0.5)).tolist() == [2.0]
    assert levy_perturbation(1, 1, [1], cfg, ScriptedRng(0.1, 0.5)).tolist() == [-2.0]
    assert levy_perturbation(1, 0.5, [3], cfg, ScriptedRng(0.5, 0.0)).tolist() == [1.5]

    rng = RngState(3)
    for _ in range(1000):
        assert np.all(np.abs(levy_perturbation(2, 0.2, [1, 1], cfg, rng)) >= 0.2)


def test_perturbation_sign_symmetry(test):
    """Tests that each component's sign is positive half of the time."""

    cfg = LevyConfig(1.5, 1)
    rng = RngState(5)

    count = 10 ** 5
    positive = np.zeros(2)

    for _ in range(count):
        positive += levy_perturbation(2, 1, [1, 1], cfg, rng) > 0

    assert np.all(np.abs(positive / count - 0.5) <= 0.01)


def test_invalid_perturbation(test):
    """Tests invalid perturbation arguments."""

    cfg = LevyConfig()

    with pytest.raises(lfa.InvalidArgument):
        levy_perturbation(2, 0.2, [1, 1, 1], cfg, RngState(0))

    with pytest.raises(lfa.InvalidArgument):
        levy_perturbation(2, 0.2, [1, 0], cfg, RngState(0))

    with pytest.raises(lfa.InvalidArgument):
        levy_perturbation(2, -0.1, [1, 1], cfg, RngState(0))

    with pytest.raises(lfa.InvalidArgument):
        levy_perturbation(0, 0.2, [], cfg, RngState(0))


def test_uniform_in_bounds(test):
    """Tests uniform initialization."""

    with pytest.raises(lfa.InvalidArgument):
        uniform_in_bounds([0, 1], [1, 1], RngState(0))

    with pytest.raises(lfa.InvalidArgument):
        uniform_in_bounds([0], [1, 1], RngState(0))

    rng = RngState(9)

    for _ in range(1000):
        position = uniform_in_bounds([0, 0], [1, 1], rng)
        assert position.shape == (2,)
        assert np.all(position >= 0) and np.all(position <= 1)

    samples = [uniform_in_bounds([-5], [5], rng)[0] for _ in range(10 ** 4)]
    assert abs(np.mean(samples)) <= 0.2
