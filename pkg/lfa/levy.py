"""Seedable randomness and heavy-tailed (Lévy) step sampling."""

import logging
import numbers

import numpy as np

from lfa.exceptions import InvalidArgument

LOG = logging.getLogger(__name__)


STEP_CAP = 1e6
"""A single Lévy step never exceeds STEP_CAP * t_min."""


class RngState:
    """Represents a seeded random number generator.

    Two states created from the same seed produce identical sample sequences.
    A state mustn't be shared between concurrently executing runs: every run
    owns its own one.
    """

    def __init__(self, seed):
        if (
            not isinstance(seed, numbers.Integral) or isinstance(seed, bool) or
            not 0 <= seed < 2 ** 64
        ):
            raise InvalidArgument("Invalid seed: {0!r} (must be a 64-bit unsigned integer)", seed)

        self.__seed = int(seed)
        self.__generator = np.random.Generator(np.random.PCG64(self.__seed))

    def __repr__(self):
        return "RngState(seed={0})".format(self.__seed)

    def seed(self):
        """Returns the seed the state was created from."""

        return self.__seed

    def random(self, size=None):
        """Returns uniform samples from [0, 1)."""

        return self.__generator.random(size)

    def normal(self, scale, size=None):
        """Returns zero-mean normal samples."""

        return self.__generator.normal(0.0, scale, size)

    def integers(self, high, size=None):
        """Returns uniform integer samples from [0, high)."""

        return self.__generator.integers(0, high, size)


class LevyConfig:
    r"""Power-law step-length law :math:`u = t^{-\lambda}` with a lower cut-off.

    :param lam: tail exponent, 1 < lam <= 3
    :param t_min: minimum step length, > 0
    """

    def __init__(self, lam=1.5, t_min=1.0):
        if not isinstance(lam, numbers.Real) or not 1 < lam <= 3:
            raise InvalidArgument("Invalid Lévy exponent: {0!r} (must be in (1, 3])", lam)

        if not isinstance(t_min, numbers.Real) or not t_min > 0:
            raise InvalidArgument("Invalid minimum step length: {0!r} (must be > 0)", t_min)

        self.lam = float(lam)
        self.t_min = float(t_min)

    def __repr__(self):
        return "LevyConfig(lam={0!r}, t_min={1!r})".format(self.lam, self.t_min)

    @property
    def cap(self):
        """The largest step length a single draw may return."""

        return STEP_CAP * self.t_min


def levy_step(cfg, rng):
    """Draws a single step length (always >= cfg.t_min)."""

    return float(levy_steps(cfg, rng, 1)[0])


def levy_steps(cfg, rng, size):
    """Draws `size` independent step lengths by inverting the Pareto CDF.

    t = t_min * (1 - U) ** (-1 / (lam - 1)) for uniform U in [0, 1), so the
    tail density is proportional to t ** -lam.
    """

    uniform = np.asarray(rng.random(size), dtype=float)

    # Overflowing draws are clipped below
    with np.errstate(over="ignore"):
        steps = cfg.t_min * np.power(1.0 - uniform, -1.0 / (cfg.lam - 1.0))

    clipped = steps > cfg.cap
    if clipped.any():
        LOG.debug("Clipped %s Lévy step(s) to %s.", int(clipped.sum()), cfg.cap)
        steps = np.where(clipped, cfg.cap, steps)

    return steps


def levy_perturbation(d, alpha, scales, cfg, rng):
    """Returns a d-dimensional Lévy-flight displacement.

    Component k is ``alpha * scales[k] * sign_k * t_k``: the sign is +1 when
    its uniform draw is >= 0.5 and -1 otherwise, t_k is an independent
    :py:func:`levy_step` draw. All d signs are drawn before the d steps.
    """

    if not isinstance(d, numbers.Integral) or d < 1:
        raise InvalidArgument("Invalid dimension: {0!r}", d)

    if not isinstance(alpha, numbers.Real) or alpha < 0:
        raise InvalidArgument("Invalid step weight: {0!r} (must be >= 0)", alpha)

    scales = np.asarray(scales, dtype=float)
    if scales.shape != (d,):
        raise InvalidArgument("Dimension mismatch: {0} scales for {1} dimensions",
            scales.size, d)

    if not np.all(scales > 0):
        raise InvalidArgument("Invalid scales: all of them must be > 0")

    signs = np.where(np.asarray(rng.random(d)) >= 0.5, 1.0, -1.0)
    steps = levy_steps(cfg, rng, d)

    return alpha * scales * signs * steps


def uniform_in_bounds(lower, upper, rng):
    """Returns a position uniformly distributed in the [lower, upper] box."""

    lower, upper = check_bounds(lower, upper)
    return lower + (upper - lower) * np.asarray(rng.random(lower.size))


def check_bounds(lower, upper):
    """Validates a pair of bound vectors and returns them as float arrays."""

    lower = np.atleast_1d(np.asarray(lower, dtype=float))
    upper = np.atleast_1d(np.asarray(upper, dtype=float))

    if lower.ndim != 1 or lower.shape != upper.shape or not lower.size:
        raise InvalidArgument("Invalid bounds: lower and upper must be non-empty vectors of equal length")

    if not np.all(lower < upper):
        raise InvalidArgument("Invalid bounds: lower must be strictly less than upper in every dimension")

    return lower, upper
