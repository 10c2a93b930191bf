"""Repeated seeded trials, performance reports and trace export."""

import concurrent.futures
import dataclasses
import io
import json
import logging
import math
import time

from typing import List, Optional

import pandas as pd

from lfa import baselines, firefly
from lfa._optimizer.result import RunResult, TraceFrame
from lfa.exceptions import InvalidArgument, LogicalError, NoTrace, OutputError

LOG = logging.getLogger(__name__)

__all__ = ["RunResult", "TraceFrame", "TrialRecord", "TrialStats", "ALGORITHMS",
    "algorithm", "run_trials", "format_report", "format_cell", "load_report",
    "write_report", "export_trace"]


ALGORITHMS = {
    "lfa": (firefly.run, firefly.FireflyParams),
    "pso": (baselines.pso_run, baselines.PsoParams),
    "ga": (baselines.ga_run, baselines.GaParams),
}
"""Algorithm name -> (run function, parameters class)."""

FORMATS = ("table", "csv", "json")

_ABSENT = "—"


@dataclasses.dataclass
class TrialRecord:
    """Outcome of one trial."""

    seed: int
    evaluations: int
    best_value: float
    success: bool
    generations: int
    seconds: float = dataclasses.field(default=0.0, compare=False)

    def as_dict(self, timings=False):
        record = dataclasses.asdict(self)
        if not timings:
            del record["seconds"]
        return record


@dataclasses.dataclass
class TrialStats:
    """Evaluation-count statistics over repeated trials.

    The mean and standard deviation are taken over successful trials only
    and are :py:const:`None` when no trial succeeded.
    """

    algorithm: str
    benchmark: str
    dimension: int
    n_trials: int
    mean_evaluations: Optional[float]
    std_evaluations: Optional[float]
    success_rate: float
    per_trial: List[TrialRecord] = dataclasses.field(default_factory=list, compare=False)

    @classmethod
    def from_records(cls, algorithm, benchmark, dimension, records):
        if not records:
            raise InvalidArgument("Empty input: no trial records to aggregate")

        records = sorted(records, key=lambda record: record.seed)
        evaluations = [record.evaluations for record in records if record.success]

        if evaluations:
            mean = math.fsum(evaluations) / len(evaluations)
            if len(evaluations) > 1:
                std = math.sqrt(math.fsum((count - mean) ** 2 for count in evaluations)
                    / (len(evaluations) - 1))
            else:
                std = 0.0
        else:
            mean = std = None

        return cls(algorithm, benchmark, dimension, len(records), mean, std,
            len(evaluations) / len(records), records)

    def as_dict(self, timings=False):
        return {
            "algorithm": self.algorithm,
            "benchmark": self.benchmark,
            "dimension": self.dimension,
            "n_trials": self.n_trials,
            "mean_evals": self.mean_evaluations,
            "std_evals": self.std_evaluations,
            "success_rate": self.success_rate,
            "per_trial": [record.as_dict(timings) for record in self.per_trial],
        }


def algorithm(name):
    """Returns (run function, parameters class) of an algorithm."""

    try:
        return ALGORITHMS[name]
    except KeyError:
        raise InvalidArgument("Unknown algorithm: {0}", name)


def run_trials(name, spec, params=None, n_trials=100, base_seed=0, jobs=1):
    """Runs independent trials with seeds base_seed, base_seed + 1, ...

    :param params: algorithm parameters (defaults if :py:const:`None`)
    :param jobs: number of worker processes
    :returns: :py:class:`TrialStats`
    """

    run, params_class = algorithm(name)

    if params is None:
        params = params_class()
    elif not isinstance(params, params_class):
        raise InvalidArgument("Invalid parameters for {0}: {1} expected", name, params_class.__name__)

    if isinstance(n_trials, bool) or not isinstance(n_trials, int) or n_trials < 1:
        raise InvalidArgument("Invalid number of trials: {0!r}", n_trials)

    if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
        raise InvalidArgument("Invalid number of jobs: {0!r}", jobs)

    # Traces aren't aggregated
    if params.trace:
        params = params.replace(trace=False)

    seeds = [base_seed + trial for trial in range(n_trials)]

    if jobs == 1:
        records = [_trial(run, spec, params, seed) for seed in seeds]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(_trial,
                [run] * n_trials, [spec] * n_trials, [params] * n_trials, seeds))

    stats = TrialStats.from_records(name, spec.name, spec.dimension, records)

    LOG.debug("%s on %s (d=%s): %s/%s successful trials.",
        name, spec.name, spec.dimension, int(round(stats.success_rate * n_trials)), n_trials)

    return stats


def format_cell(stats):
    """Renders "mean ± std (rate%)"."""

    # Truncated so that a rate below 100% is never shown as 100%
    rate = "({0}%)".format(int(math.floor(stats.success_rate * 100 + 1e-9)))

    if stats.mean_evaluations is None:
        return "{0} {1}".format(_ABSENT, rate)

    return "{0:.0f} ± {1:.0f} {2}".format(stats.mean_evaluations, stats.std_evaluations, rate)


def format_report(stats, format="table", timings=False):
    """Renders trial statistics as a table, CSV or JSON document.

    The table has a row per benchmark and a column per algorithm, in the
    order of their first appearance.
    """

    stats = list(stats)
    if not stats:
        raise InvalidArgument("Empty input: no statistics to report")

    if format == "table":
        return _format_table(stats)
    elif format == "csv":
        return _summary_frame(stats).to_csv(index=False)
    elif format == "json":
        return json.dumps([entry.as_dict(timings) for entry in stats], indent=2) + "\n"
    else:
        raise InvalidArgument("Invalid report format: {0}", format)


def load_report(document, format):
    """Parses a CSV or JSON report back into a list of :py:class:`TrialStats`."""

    if format == "csv":
        frame = pd.read_csv(io.StringIO(document), float_precision="round_trip")
        return [
            TrialStats(row.algorithm, row.benchmark, int(row.dimension), int(row.n_trials),
                _optional(row.mean_evals), _optional(row.std_evals), float(row.success_rate))
            for row in frame.itertuples(index=False)]
    elif format == "json":
        return [
            TrialStats(entry["algorithm"], entry["benchmark"], entry["dimension"], entry["n_trials"],
                entry["mean_evals"], entry["std_evals"], entry["success_rate"],
                [TrialRecord(**record) for record in entry["per_trial"]])
            for entry in json.loads(document)]
    else:
        raise InvalidArgument("Invalid report format: {0}", format)


def write_report(stats, path, format="table", timings=False):
    """Writes a report file."""

    document = format_report(stats, format, timings)

    try:
        with open(path, "w") as report_file:
            report_file.write(document)
    except EnvironmentError as e:
        raise OutputError(path, e)


def export_trace(result, path):
    """Writes a run trace as CSV.

    Columns: generation, index, x1..xd, intensity; a row per agent per
    snapshot, generation 0 being the initial population.
    """

    if result.trace is None:
        raise NoTrace()

    d = result.dimension
    columns = ["generation", "index"] + ["x{0}".format(k + 1) for k in range(d)] + ["intensity"]
    rows = []

    for frame in result.trace:
        if frame.positions.shape[1:] != (d,):
            raise LogicalError()

        for index, (position, intensity) in enumerate(zip(frame.positions, frame.intensities())):
            rows.append([frame.generation, index] + position.tolist() + [intensity])

    try:
        pd.DataFrame(rows, columns=columns).to_csv(path, index=False)
    except EnvironmentError as e:
        raise OutputError(path, e)

    LOG.debug("Trace of %s frame(s) written to %s.", len(result.trace), path)


def _trial(run, spec, params, seed):
    start_time = time.perf_counter()
    result = run(spec, params, seed)

    return TrialRecord(seed, result.evaluations, result.best_value, result.success,
        result.generations, time.perf_counter() - start_time)


def _summary_frame(stats):
    return pd.DataFrame([{
        "algorithm": entry.algorithm,
        "benchmark": entry.benchmark,
        "dimension": entry.dimension,
        "n_trials": entry.n_trials,
        "mean_evals": entry.mean_evaluations,
        "std_evals": entry.std_evaluations,
        "success_rate": entry.success_rate,
    } for entry in stats], columns=["algorithm", "benchmark", "dimension", "n_trials",
        "mean_evals", "std_evals", "success_rate"])


def _format_table(stats):
    algorithms = []
    benchmarks = []
    cells = {}

    for entry in stats:
        benchmark = "{0} (d={1})".format(entry.benchmark, entry.dimension)

        if entry.algorithm not in algorithms:
            algorithms.append(entry.algorithm)
        if benchmark not in benchmarks:
            benchmarks.append(benchmark)

        cells[benchmark, entry.algorithm] = format_cell(entry)

    rows = [["Function/Algorithm"] + [name.upper() for name in algorithms]]
    rows += [[benchmark] + [cells.get((benchmark, name), "") for name in algorithms]
        for benchmark in benchmarks]

    widths = [max(len(row[column]) for row in rows) for column in range(len(rows[0]))]

    return "".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() + "\n"
        for row in rows)


def _optional(value):
    return None if pd.isna(value) else float(value)
