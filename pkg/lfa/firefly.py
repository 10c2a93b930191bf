"""The Lévy-flight firefly algorithm."""

import logging
import math

import numpy as np

from lfa._optimizer.loop import run_generations
from lfa._optimizer.params import Params, positive_vector_or_none, real
from lfa.benchmarks import EvalCounter
from lfa.exceptions import InvalidArgument, PreconditionViolation
from lfa.levy import LevyConfig, RngState, levy_perturbation, uniform_in_bounds

LOG = logging.getLogger(__name__)


class FireflyParams(Params):
    r"""Parameters of the Lévy-flight firefly algorithm.

    :keyword beta0: attractiveness at r = 0 (default is 1)
    :keyword gamma: light absorption coefficient :math:`\gamma \ge 0`
        (default is 1)
    :keyword alpha: randomization weight in [0, 1] (default is 0.2)
    :keyword lam: Lévy exponent in (1, 3] (default is 1.5)
    :keyword t_min: minimum Lévy step length (default is 1)
    :keyword m: attenuation exponent :math:`\ge 1` of
        :math:`\beta(r) = \beta_0 e^{-\gamma r^m}` (default is 2)
    :keyword scales: per-dimension scale vector :math:`S_k > 0`; if
        :py:const:`None`, a tenth of the search box extent (default)

    Common options (``population``, ``max_generations``, ``epsilon``,
    ``window``, ``success_threshold``, ``trace``) are described in
    :py:class:`~lfa._optimizer.params.Params`.
    """

    _OPTIONS = dict(Params._OPTIONS,
        beta0=(1.0, real(0, low_open=True)),
        gamma=(1.0, real(0)),
        alpha=(0.2, real(0, 1)),
        lam=(1.5, real(1, 3, low_open=True)),
        t_min=(1.0, real(0, low_open=True)),
        m=(2.0, real(1)),
        scales=(None, positive_vector_or_none),
    )

    def levy(self):
        """Returns the Lévy step law configured by the parameters."""

        return LevyConfig(self.lam, self.t_min)

    def characteristic_length(self):
        """Returns gamma ** (-1/m) (infinite for gamma = 0)."""

        if self.gamma == 0:
            return math.inf

        return self.gamma ** (-1.0 / self.m)

    def scales_for(self, spec):
        """Returns the scale vector for a problem."""

        if self.scales is None:
            return spec.width() / 10.0

        scales = np.atleast_1d(self.scales)
        if scales.size == 1:
            scales = np.full(spec.dimension, scales[0])

        if scales.size != spec.dimension:
            raise InvalidArgument("Dimension mismatch: {0} scales for {1} dimensions",
                scales.size, spec.dimension)

        return scales


class Firefly:
    """A firefly: a position and its cached light intensity I = -f(position)."""

    def __init__(self, position, intensity=None):
        self.position = np.array(position, dtype=float)
        self.intensity = intensity

    def __repr__(self):
        return "Firefly({0}, I={1!r})".format(self.position.tolist(), self.intensity)

    @property
    def value(self):
        """Objective value at the firefly's position."""

        return -self.intensity


class Swarm:
    """A population of fireflies ranked brightest-first with a best-so-far record."""

    def __init__(self, fireflies):
        self.fireflies = list(fireflies)
        self.generation = 0
        self.best_position = None
        self.best_value = math.inf

    def __len__(self):
        return len(self.fireflies)

    @classmethod
    def initialize(cls, spec, size, counter, rng):
        """Generates, evaluates and ranks a uniformly distributed swarm."""

        swarm = cls(Firefly(uniform_in_bounds(spec.lower, spec.upper, rng)) for _ in range(size))

        for firefly in swarm.fireflies:
            swarm.evaluate(firefly, counter)

        swarm.rank()
        return swarm

    def evaluate(self, firefly, counter):
        """Refreshes the firefly's intensity and the best-so-far record."""

        value = counter(firefly.position)
        firefly.intensity = -value

        if value < self.best_value:
            self.best_value = value
            self.best_position = firefly.position.copy()

    def rank(self):
        """Sorts the fireflies brightest-first (ties keep their order)."""

        self.fireflies.sort(key=lambda firefly: -firefly.intensity)

    def brightest(self):
        """Returns the brightest firefly (the first one among equals)."""

        return max(self.fireflies, key=lambda firefly: firefly.intensity)

    def positions(self):
        return np.array([firefly.position for firefly in self.fireflies])

    def values(self):
        return np.array([firefly.value for firefly in self.fireflies])


def attractiveness(r, params):
    """Returns beta0 * exp(-gamma * r ** m)."""

    if params.gamma == 0:
        return params.beta0

    # Huge r ** m underflows the attractiveness to 0
    with np.errstate(over="ignore", under="ignore"):
        return float(params.beta0 * np.exp(-params.gamma * np.power(float(r), params.m)))


def distance(a, b):
    """Returns the Cartesian distance between two positions."""

    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    if a.shape != b.shape:
        raise InvalidArgument("Dimension mismatch: {0} vs {1}", a.shape, b.shape)

    return float(np.linalg.norm(a - b))


def move_toward(i, j, params, rng, spec, scales=None):
    """Returns the new position of firefly i attracted by a brighter firefly j.

    The attraction term is applied as the convex combination
    (1 - beta) x_i + beta x_j, so beta = 1 lands exactly on x_j and beta = 0
    leaves x_i untouched. The Lévy perturbation is added afterwards and the
    result is clamped to the search box.
    """

    if not j.intensity > i.intensity:
        raise PreconditionViolation("A firefly may only move towards a brighter one")

    if scales is None:
        scales = params.scales_for(spec)

    beta = attractiveness(distance(i.position, j.position), params)
    position = (1.0 - beta) * i.position + beta * j.position

    return _perturb(position, params, rng, spec, scales)


def random_walk(i, params, rng, spec, scales=None):
    """Returns the new position of a firefly that sees no brighter one."""

    if scales is None:
        scales = params.scales_for(spec)

    return _perturb(i.position, params, rng, spec, scales)


def generation_step(swarm, params, spec, counter, rng):
    """Performs one generation over a ranked swarm.

    For every firefly i (in rank order) and every j <= i, i moves towards j
    if j is strictly brighter and is re-evaluated right away. Then the
    brightest firefly walks randomly, and the swarm is re-ranked.
    """

    scales = params.scales_for(spec)
    fireflies = swarm.fireflies
    moves = 0

    for i in range(len(fireflies)):
        for j in range(i + 1):
            if fireflies[j].intensity > fireflies[i].intensity:
                fireflies[i].position = move_toward(
                    fireflies[i], fireflies[j], params, rng, spec, scales)
                swarm.evaluate(fireflies[i], counter)
                moves += 1

    brightest = swarm.brightest()
    brightest.position = random_walk(brightest, params, rng, spec, scales)
    swarm.evaluate(brightest, counter)

    swarm.rank()
    swarm.generation += 1

    LOG.debug("Generation %s: %s move(s), best=%s.", swarm.generation, moves, swarm.best_value)

    return swarm


def run(spec, params, seed):
    """Minimizes a benchmark with the Lévy-flight firefly algorithm.

    :returns: :py:class:`~lfa.harness.RunResult`
    """

    scales = params.scales_for(spec)

    rng = RngState(seed)
    counter = EvalCounter(spec.function)
    swarm = Swarm.initialize(spec, params.population, counter, rng)

    LOG.debug("Characteristic length %s, scales %s.", params.characteristic_length(), scales)

    return run_generations("lfa", spec, params, seed, swarm, counter,
        lambda: generation_step(swarm, params, spec, counter, rng))


def _perturb(position, params, rng, spec, scales):
    displacement = levy_perturbation(spec.dimension, params.alpha, scales, params.levy(), rng)
    return np.clip(position + displacement, spec.lower, spec.upper)
