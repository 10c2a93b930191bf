"""Benchmark objective functions with bounds, known optima and evaluation counting.

All functions are minimization problems. The registry (bounds, default
dimensions, known optima) lives in ``lfa/data/benchmarks.json``.
"""

import functools
import json
import logging
import math
import numbers
import os

import numpy as np
from scipy.optimize import minimize_scalar

from lfa.exceptions import InvalidArgument, UnknownFunction
from lfa.levy import check_bounds

LOG = logging.getLogger(__name__)


_REGISTRY_PATH = os.path.join(os.path.dirname(__file__), "data", "benchmarks.json")

_YANG_LIMIT = 2 * math.pi

_SCHWEFEL_CONSTANT = 418.9828872724338

_MICHALEWICZ_STEEPNESS = 10

_SHUBERT_J = np.arange(1, 6, dtype=float)


class BenchmarkSpec:
    """A test function together with its search box and known optimum.

    :param optimum_hint: known minimizer or :py:const:`None` for functions
        with several global minima (Shubert).
    """

    def __init__(self, name, function, lower, upper, optimum_value, optimum_hint=None):
        lower, upper = check_bounds(lower, upper)

        if optimum_hint is not None:
            optimum_hint = np.asarray(optimum_hint, dtype=float)
            if optimum_hint.shape != lower.shape:
                raise InvalidArgument("Dimension mismatch: optimum hint of {0} has {1} components",
                    name, optimum_hint.size)

        self.name = name
        self.function = function
        self.dimension = lower.size
        self.lower = lower
        self.upper = upper
        self.optimum_value = float(optimum_value)
        self.optimum_hint = optimum_hint

    def __call__(self, x):
        return self.function(x)

    def __repr__(self):
        return "BenchmarkSpec({0!r}, d={1})".format(self.name, self.dimension)

    def contains(self, x):
        """Returns True if the position lies inside the search box."""

        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def width(self):
        """Returns the per-dimension extent of the search box."""

        return self.upper - self.lower


class EvalCounter:
    """An objective wrapper that counts every evaluation."""

    def __init__(self, function):
        self.count = 0
        self.__function = function

    def __call__(self, x):
        self.count += 1
        return float(self.__function(x))


def ackley(x):
    """The Ackley function. f* = 0 at the origin."""

    x = _vector(x)
    d = x.size

    rms = math.sqrt(float(np.dot(x, x)) / d)
    mean_cos = float(np.sum(np.cos(2 * math.pi * x))) / d

    # Grouped so that both terms are exactly zero at the origin
    return 20.0 * (1.0 - math.exp(-0.2 * rms)) + (math.e - math.exp(mean_cos))


def yang_forest(x):
    """Yang's forest function on [-2pi, 2pi]^d. f* = 0 at the origin.

    Non-smooth at the optimum: no gradient is ever used.
    """

    x = _vector(x)
    if np.any(np.abs(x) > _YANG_LIMIT):
        raise InvalidArgument("Out of domain: Yang's forest function is defined on [-2pi, 2pi]^d")

    return float(np.sum(np.abs(x)) * math.exp(-float(np.sum(np.sin(x * x)))))


def sphere(x):
    """De Jong's sphere function."""

    x = _vector(x)
    return float(np.dot(x, x))


def rosenbrock(x):
    x = _vector(x)
    if x.size < 2:
        raise InvalidArgument("Out of domain: Rosenbrock function requires at least 2 dimensions")

    head, tail = x[:-1], x[1:]
    return float(np.sum(100.0 * (tail - head * head) ** 2 + (1.0 - head) ** 2))


def schwefel(x):
    """Schwefel's function, 418.9829 d - sum(x sin(sqrt|x|)).

    The per-dimension constant is subtracted term by term to keep the value
    near zero at the minimizer x_k = 420.9687.
    """

    x = _vector(x)
    return float(np.sum(_SCHWEFEL_CONSTANT - x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x):
    x = _vector(x)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2 * math.pi * x)))


def easom(x):
    """Easom's function (2-D). f* = -1 at (pi, pi)."""

    x = _vector(x)
    if x.size != 2:
        raise InvalidArgument("Out of domain: Easom function is defined for 2 dimensions only")

    x1, x2 = x
    return float(-math.cos(x1) * math.cos(x2) * math.exp(-((x1 - math.pi) ** 2 + (x2 - math.pi) ** 2)))


def griewank(x):
    x = _vector(x)
    index = np.arange(1, x.size + 1, dtype=float)
    return float(1.0 + np.dot(x, x) / 4000.0 - np.prod(np.cos(x / np.sqrt(index))))


def michalewicz(x):
    """Michalewicz's function with steepness m = 10."""

    x = _vector(x)
    index = np.arange(1, x.size + 1, dtype=float)
    return float(-np.sum(
        np.sin(x) * np.sin(index * x * x / math.pi) ** (2 * _MICHALEWICZ_STEEPNESS)))


def shubert(x):
    """Shubert's function (2-D) with 18 global minima."""

    x = _vector(x)
    if x.size != 2:
        raise InvalidArgument("Out of domain: Shubert function is defined for 2 dimensions only")

    j = _SHUBERT_J
    return float(np.prod([np.sum(j * np.cos((j + 1) * xi + j)) for xi in x]))


_FUNCTIONS = {
    "ackley": ackley,
    "dejong": sphere,
    "easom": easom,
    "griewank": griewank,
    "michalewicz": michalewicz,
    "rastrigin": rastrigin,
    "rosenbrock": rosenbrock,
    "schwefel": schwefel,
    "shubert": shubert,
    "yang": yang_forest,
}


def names():
    """Returns canonical names of all registered functions."""

    return sorted(_registry())


def function(name):
    """Returns the plain objective callable of a registered function."""

    return _FUNCTIONS[_resolve(name)]


def standard_function(name, x):
    """Evaluates a registered function, checking its conventional bounds."""

    name = _resolve(name)
    entry = _registry()[name]

    x = _vector(x)
    if np.any(x < entry["lower"]) or np.any(x > entry["upper"]):
        raise InvalidArgument("Out of domain: {0} is defined on [{1}, {2}]^d",
            name, entry["lower"], entry["upper"])

    return _FUNCTIONS[name](x)


def lookup(name, dimension=None):
    """Returns a fully populated :py:class:`BenchmarkSpec`.

    :param dimension: defaults to the registry's default dimension.
    """

    name = _resolve(name)
    entry = _registry()[name]

    if dimension is None:
        dimension = entry["default_dimension"]

    if (
        not isinstance(dimension, numbers.Integral) or isinstance(dimension, bool) or
        dimension < entry.get("min_dimension", 1) or
        entry["dimensions"] is not None and dimension not in entry["dimensions"]
    ):
        raise InvalidArgument("Unsupported dimension for {0}: {1!r}", name, dimension)

    dimension = int(dimension)
    objective = _FUNCTIONS[name]

    lower = np.full(dimension, entry["lower"], dtype=float)
    upper = np.full(dimension, entry["upper"], dtype=float)

    hint = entry["optimum_hint"]
    value = entry["optimum_value"]

    if hint == "separable":
        hint = _michalewicz_minimizer(dimension)
    elif hint is not None:
        hint = np.full(dimension, hint, dtype=float)

    if value in ("separable", "at-hint"):
        value = objective(hint)

    return BenchmarkSpec(name, objective, lower, upper, value, hint)


def custom(name, objective, lower, upper, optimum_value, optimum_hint=None):
    """Wraps a user-supplied objective into a :py:class:`BenchmarkSpec`."""

    if not callable(objective):
        raise InvalidArgument("Invalid objective for {0}: it must be callable", name)

    return BenchmarkSpec(name, objective, lower, upper, optimum_value, optimum_hint)


def registry_table():
    """Returns the registry as a list of rows (one per function)."""

    rows = []

    for name in names():
        spec = lookup(name)
        entry = _registry()[name]

        rows.append({
            "name": name,
            "title": entry["title"],
            "dimension": spec.dimension,
            "lower": entry["lower"],
            "upper": entry["upper"],
            "optimum_value": spec.optimum_value,
            "minimizer": None if spec.optimum_hint is None else (
                "per-dimension" if entry["optimum_hint"] == "separable" else entry["optimum_hint"]),
        })

    return rows


@functools.lru_cache(maxsize=None)
def _registry():
    with open(_REGISTRY_PATH) as registry_file:
        return json.load(registry_file)


def _resolve(name):
    """Maps a function name or alias to its canonical name."""

    registry = _registry()

    if name in registry:
        return name

    for canonical, entry in registry.items():
        if name in entry["aliases"]:
            return canonical

    raise UnknownFunction(name)


@functools.lru_cache(maxsize=None)
def _michalewicz_coordinate_minimizer(index):
    """
    Locates the minimum of -sin(x) sin(i x^2 / pi)^2m over [0, pi]: dense
    grid, then bounded refinement around the best grid point.
    """

    def term(x):
        return -math.sin(x) * math.sin(index * x * x / math.pi) ** (2 * _MICHALEWICZ_STEEPNESS)

    grid = np.linspace(0.0, math.pi, 20001)
    values = -np.sin(grid) * np.sin(index * grid * grid / math.pi) ** (2 * _MICHALEWICZ_STEEPNESS)
    best = int(np.argmin(values))

    low = grid[max(best - 1, 0)]
    high = grid[min(best + 1, grid.size - 1)]

    refined = minimize_scalar(term, bounds=(low, high), method="bounded",
        options={"xatol": 1e-12})

    return float(refined.x) if refined.fun <= values[best] else float(grid[best])


def _michalewicz_minimizer(dimension):
    # Separable: the global minimizer is the vector of 1-D minimizers
    return np.array([_michalewicz_coordinate_minimizer(index)
        for index in range(1, dimension + 1)])


def _vector(x):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.ndim != 1 or not x.size:
        raise InvalidArgument("Empty input: a non-empty position vector is required")

    return x
