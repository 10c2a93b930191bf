"""Provides run result types."""

import json

import numpy as np


class TraceFrame:
    """A snapshot of a population taken after a generation.

    Generation 0 is the initial population.
    """

    def __init__(self, generation, positions, values, best_value):
        self.generation = generation
        self.positions = np.array(positions, dtype=float)
        self.values = np.array(values, dtype=float)
        self.best_value = best_value

    def intensities(self):
        """Returns light intensities (I = -f) of the snapshot."""

        return -self.values


class RunResult:
    """Represents the outcome of a single seeded run."""

    def __init__(self, algorithm, benchmark, seed, best_position, best_value, evaluations,
                 success, generations, stop_reason, trace=None):
        self.algorithm = algorithm
        self.benchmark = benchmark
        self.seed = seed
        self.best_position = np.array(best_position, dtype=float)
        self.best_value = float(best_value)
        self.evaluations = evaluations
        self.success = success
        self.generations = generations
        self.stop_reason = stop_reason
        self.trace = trace

    def __repr__(self):
        return "RunResult({0}, {1}, best={2!r}, evaluations={3}, success={4})".format(
            self.algorithm, self.benchmark, self.best_value, self.evaluations, self.success)

    @property
    def dimension(self):
        return self.best_position.size

    def as_dict(self):
        return {
            "algorithm": self.algorithm,
            "benchmark": self.benchmark,
            "dimension": self.dimension,
            "seed": self.seed,
            "best_value": self.best_value,
            "best_position": self.best_position.tolist(),
            "evaluations": self.evaluations,
            "success": self.success,
            "generations": self.generations,
            "stop_reason": self.stop_reason,
        }

    def to_json(self):
        """Serializes the result (without trace) to a JSON document."""

        return json.dumps(self.as_dict(), indent=2)
