"""Drives optimizer generations until a stop criterion holds."""

import logging

from lfa._optimizer.result import RunResult, TraceFrame

LOG = logging.getLogger(__name__)


STOP_TOLERANCE = "tolerance"
"""Best-so-far improved less than epsilon over the stagnation window."""

STOP_MAX_GENERATIONS = "max-generations"
"""The generation cap has been reached."""


def run_generations(algorithm, spec, params, seed, population, counter, step):
    """Runs `step` generation by generation and assembles a RunResult.

    `population` must be already initialized and evaluated. It has to expose
    ``positions()``, ``values()``, ``best_position`` and ``best_value``
    (best-so-far over every evaluation made). `counter` is the
    :py:class:`~lfa.benchmarks.EvalCounter` every evaluation goes through.
    """

    LOG.debug("Running %s on %s (d=%s, seed=%s)...", algorithm, spec.name, spec.dimension, seed)

    trace = [] if params.trace else None

    def snapshot(generation):
        if trace is not None:
            trace.append(TraceFrame(generation,
                population.positions(), population.values(), population.best_value))

    history = [population.best_value]
    snapshot(0)

    generation = 0
    stop_reason = STOP_MAX_GENERATIONS

    while generation < params.max_generations:
        step()
        generation += 1

        history.append(population.best_value)
        snapshot(generation)

        if (
            generation >= params.window and
            history[-1 - params.window] - history[-1] < params.epsilon
        ):
            stop_reason = STOP_TOLERANCE
            break

    best_value = population.best_value
    success = abs(best_value - spec.optimum_value) <= params.success_threshold

    LOG.debug("%s on %s stopped (%s) after %s generation(s): best=%s, evaluations=%s.",
        algorithm, spec.name, stop_reason, generation, best_value, counter.count)

    return RunResult(algorithm, spec.name, seed, population.best_position, best_value,
        counter.count, success, generation, stop_reason, trace)
