"""Particle swarm optimization and genetic algorithm baselines.

PSO is the original formulation without any inertia weight; GA is a
real-coded generational algorithm with tournament selection, uniform
crossover and Gaussian mutation, without elitism.
"""

import logging
import math

import numpy as np

from lfa._optimizer.loop import run_generations
from lfa._optimizer.params import Params, integer, positive_vector_or_none, real
from lfa.benchmarks import EvalCounter
from lfa.exceptions import InvalidArgument
from lfa.levy import RngState, uniform_in_bounds

LOG = logging.getLogger(__name__)


class PsoParams(Params):
    """Parameters of the inertia-free particle swarm optimizer.

    :keyword c1: cognitive weight (default is 2)
    :keyword c2: social weight (default is 2)
    :keyword velocity_cap: per-dimension velocity limit; if
        :py:const:`None`, the search box extent (default)
    """

    _OPTIONS = dict(Params._OPTIONS,
        c1=(2.0, real(0)),
        c2=(2.0, real(0)),
        velocity_cap=(None, positive_vector_or_none),
    )

    def velocity_cap_for(self, spec):
        if self.velocity_cap is None:
            return spec.width()

        cap = np.atleast_1d(self.velocity_cap)
        if cap.size == 1:
            cap = np.full(spec.dimension, cap[0])

        if cap.size != spec.dimension:
            raise InvalidArgument("Dimension mismatch: {0} velocity caps for {1} dimensions",
                cap.size, spec.dimension)

        return cap


class GaParams(Params):
    """Parameters of the real-coded generational genetic algorithm.

    :keyword mutation: per-gene mutation probability (default is 0.05)
    :keyword crossover: crossover probability (default is 0.95)
    :keyword tournament: tournament size (default is 2)
    :keyword sigma: mutation standard deviation relative to the search box
        extent (default is 0.1)
    """

    _OPTIONS = dict(Params._OPTIONS,
        mutation=(0.05, real(0, 1)),
        crossover=(0.95, real(0, 1)),
        tournament=(2, integer(1)),
        sigma=(0.1, real(0, low_open=True)),
    )


class ParticleSwarm:
    """A swarm of particles with velocities and personal bests."""

    def __init__(self, spec, params, counter, rng):
        self.__spec = spec
        self.__params = params
        self.__counter = counter
        self.__rng = rng
        self.__cap = params.velocity_cap_for(spec)

        size = params.population

        self.x = np.array([uniform_in_bounds(spec.lower, spec.upper, rng) for _ in range(size)])
        self.v = np.zeros_like(self.x)
        self.pbest = self.x.copy()
        self.pbest_values = np.array([counter(position) for position in self.x])
        self.current_values = self.pbest_values.copy()

        self.best_position = None
        self.best_value = math.inf
        self.__update_best()

    def positions(self):
        return self.x.copy()

    def values(self):
        return self.current_values.copy()

    def step(self):
        """Performs one synchronous generation."""

        params = self.__params
        size, d = self.x.shape

        r1 = self.__rng.random((size, d))
        r2 = self.__rng.random((size, d))

        self.v = (self.v + params.c1 * r1 * (self.pbest - self.x) +
            params.c2 * r2 * (self.best_position - self.x))
        self.v = np.clip(self.v, -self.__cap, self.__cap)
        self.x = np.clip(self.x + self.v, self.__spec.lower, self.__spec.upper)

        self.current_values = np.array([self.__counter(position) for position in self.x])

        improved = self.current_values < self.pbest_values
        self.pbest[improved] = self.x[improved]
        self.pbest_values[improved] = self.current_values[improved]

        self.__update_best()

    def __update_best(self):
        index = int(np.argmin(self.pbest_values))

        if self.pbest_values[index] < self.best_value:
            self.best_value = float(self.pbest_values[index])
            self.best_position = self.pbest[index].copy()


class GeneticPopulation:
    """A generation of individuals, fully replaced by its offspring at every step."""

    def __init__(self, spec, params, counter, rng, individuals=None):
        self.__spec = spec
        self.__params = params
        self.__counter = counter
        self.__rng = rng
        self.__sigma = params.sigma * spec.width()

        if individuals is None:
            individuals = [uniform_in_bounds(spec.lower, spec.upper, rng)
                for _ in range(params.population)]

        self.individuals = np.array(individuals, dtype=float)
        self.fitness = np.array([counter(individual) for individual in self.individuals])

        self.best_position = None
        self.best_value = math.inf
        self.__update_best()

    def positions(self):
        return self.individuals.copy()

    def values(self):
        return self.fitness.copy()

    def step(self):
        """Breeds a complete new generation and replaces the current one."""

        size = len(self.individuals)
        offspring = []

        while len(offspring) < size:
            first, second = self.__crossover(self.__select(), self.__select())
            offspring.append(self.__mutate(first))
            if len(offspring) < size:
                offspring.append(self.__mutate(second))

        self.individuals = np.array(offspring)
        self.fitness = np.array([self.__counter(individual) for individual in self.individuals])
        self.__update_best()

    def __select(self):
        """Tournament selection: the fittest of k uniformly drawn individuals."""

        players = self.__rng.integers(len(self.individuals), self.__params.tournament)
        winner = players[int(np.argmin(self.fitness[players]))]
        return self.individuals[winner]

    def __crossover(self, first, second):
        """Uniform crossover applied with the crossover probability."""

        if self.__rng.random() >= self.__params.crossover:
            return first.copy(), second.copy()

        mask = self.__rng.random(first.size) < 0.5
        return np.where(mask, first, second), np.where(mask, second, first)

    def __mutate(self, individual):
        """Per-gene Gaussian mutation clamped to the search box."""

        mask = self.__rng.random(individual.size) < self.__params.mutation
        if not mask.any():
            return individual

        noise = self.__rng.normal(self.__sigma)
        mutated = np.where(mask, individual + noise, individual)
        return np.clip(mutated, self.__spec.lower, self.__spec.upper)

    def __update_best(self):
        index = int(np.argmin(self.fitness))

        if self.fitness[index] < self.best_value:
            self.best_value = float(self.fitness[index])
            self.best_position = self.individuals[index].copy()


def pso_run(spec, params, seed):
    """Minimizes a benchmark with the inertia-free particle swarm optimizer."""

    rng = RngState(seed)
    counter = EvalCounter(spec.function)
    swarm = ParticleSwarm(spec, params, counter, rng)

    return run_generations("pso", spec, params, seed, swarm, counter, swarm.step)


def ga_run(spec, params, seed):
    """Minimizes a benchmark with the generational genetic algorithm."""

    rng = RngState(seed)
    counter = EvalCounter(spec.function)
    population = GeneticPopulation(spec, params, counter, rng)

    return run_generations("ga", spec, params, seed, population, counter, population.step)
