"""Tests particle swarm optimization and genetic algorithm baselines."""

import numpy as np
import pytest

import lfa
from lfa import benchmarks
from lfa.baselines import GaParams, GeneticPopulation, ParticleSwarm, PsoParams, ga_run, pso_run
from lfa.benchmarks import EvalCounter

import test
from test import seeded
test.init(globals())


def test_params(test):
    """Tests parameter defaults and validation."""

    params = PsoParams()
    assert (params.c1, params.c2, params.population) == (2.0, 2.0, 40)
    assert params.velocity_cap_for(benchmarks.lookup("ackley", 2)).tolist() == [65.536, 65.536]
    assert PsoParams(velocity_cap=3).velocity_cap_for(benchmarks.lookup("ackley", 2)).tolist() == [3, 3]

    with pytest.raises(lfa.InvalidArgument):
        PsoParams(velocity_cap=[1, 2, 3]).velocity_cap_for(benchmarks.lookup("ackley", 2))

    params = GaParams()
    assert (params.mutation, params.crossover, params.tournament, params.sigma) == (0.05, 0.95, 2, 0.1)

    for params_class, options in (
        (PsoParams, {"c1": -1}), (PsoParams, {"c2": "2"}), (PsoParams, {"velocity_cap": 0}),
        (PsoParams, {"alpha": 0.2}), (GaParams, {"mutation": 1.5}), (GaParams, {"crossover": -0.1}),
        (GaParams, {"tournament": 0}), (GaParams, {"sigma": 0}),
    ):
        with pytest.raises(lfa.InvalidArgument):
            params_class(**options)


def test_pso_without_acceleration(test):
    """Tests that particles never move with zero acceleration weights."""

    spec = benchmarks.lookup("ackley", 3)
    params = PsoParams(c1=0, c2=0, population=10, trace=True)

    result = pso_run(spec, params, 5)

    assert result.stop_reason == "tolerance"
    assert result.generations == 10
    assert result.evaluations == 10 * 11

    initial = result.trace[0].positions.tolist()
    for frame in result.trace:
        assert frame.positions.tolist() == initial


def test_pso_fixed_point(test):
    """Tests that a swarm sitting at its global best doesn't move."""

    spec = benchmarks.lookup("rastrigin", 2)
    params = PsoParams(population=5)
    counter = EvalCounter(spec.function)

    swarm = ParticleSwarm(spec, params, counter, seeded())
    swarm.x[:] = [0.5, -0.5]
    swarm.pbest[:] = [0.5, -0.5]
    swarm.pbest_values[:] = spec([0.5, -0.5])
    swarm.best_position = np.array([0.5, -0.5])
    swarm.best_value = spec([0.5, -0.5])

    for _ in range(20):
        swarm.step()
        assert swarm.x.tolist() == [[0.5, -0.5]] * 5
        assert swarm.v.tolist() == [[0, 0]] * 5


def test_pso_step(test):
    """Tests velocity clamping and personal best bookkeeping."""

    spec = benchmarks.lookup("dejong", 4)
    params = PsoParams(population=12, velocity_cap=0.5)
    counter = EvalCounter(spec.function)
    swarm = ParticleSwarm(spec, params, counter, seeded(1))

    for _ in range(30):
        swarm.step()

        assert np.all(np.abs(swarm.v) <= 0.5)
        assert all(spec.contains(position) for position in swarm.x)
        assert np.all(swarm.pbest_values <= swarm.current_values)
        assert swarm.pbest_values.tolist() == [spec(position) for position in swarm.pbest]
        assert swarm.best_value == swarm.pbest_values.min()

    assert counter.count == 12 * 31


def test_ga_invariant_population(test):
    """Tests that clones stay unchanged without mutation."""

    spec = benchmarks.lookup("griewank", 3)
    clone = [1.5, -2.0, 0.25]

    for crossover in (0, 1):
        params = GaParams(population=6, mutation=0, crossover=crossover)
        counter = EvalCounter(spec.function)
        population = GeneticPopulation(spec, params, counter, seeded(), [clone] * 6)

        for _ in range(25):
            population.step()
            assert population.individuals.tolist() == [clone] * 6

        assert counter.count == 6 * 26


def test_ga_no_elitism(test):
    """Tests that the best individual isn't carried over."""

    spec = benchmarks.lookup("dejong", 2)
    params = GaParams(population=4, mutation=1, crossover=0)
    lost = 0

    for seed in range(1000):
        population = GeneticPopulation(spec, params, EvalCounter(spec.function), seeded(seed))
        best = population.individuals[int(np.argmin(population.fitness))].tolist()

        population.step()
        if best not in population.individuals.tolist():
            lost += 1

    # Every gene is mutated, so the best individual never survives
    assert lost == 1000


def test_ga_mutation_bounds(test):
    """Tests that mutated genes are clamped to the search box."""

    spec = benchmarks.lookup("dejong", 3)
    params = GaParams(population=8, mutation=1, sigma=10)
    population = GeneticPopulation(spec, params, EvalCounter(spec.function), seeded(2))

    for _ in range(20):
        population.step()
        assert all(spec.contains(individual) for individual in population.individuals)


@pytest.mark.parametrize("run,params_class", [(pso_run, PsoParams), (ga_run, GaParams)])
def test_run_properties(test, run, params_class):
    """Tests accounting, bounds, determinism and monotone best-so-far."""

    for name in ("ackley", "rosenbrock", "schwefel"):
        spec = benchmarks.lookup(name, 3)

        for seed in range(3):
            params = params_class(population=10, max_generations=40, trace=True)
            result = run(spec, params, seed)

            assert result.evaluations == 10 * (result.generations + 1)
            assert result.best_value == spec(result.best_position)
            assert run(spec, params, seed).to_json() == result.to_json()

            best_values = [frame.best_value for frame in result.trace]
            assert all(a >= b for a, b in zip(best_values, best_values[1:]))

            for frame in result.trace:
                assert all(spec.contains(position) for position in frame.positions)
                assert frame.values.tolist() == [spec(position) for position in frame.positions]


def test_run_without_generations(test):
    """Tests runs that never enter the generation loop."""

    spec = benchmarks.lookup("ackley", 2)

    for run, params in ((pso_run, PsoParams(max_generations=0)), (ga_run, GaParams(max_generations=0))):
        result = run(spec, params, 0)
        assert result.evaluations == 40
        assert result.generations == 0
