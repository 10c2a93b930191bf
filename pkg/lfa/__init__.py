"""Lévy-flight firefly algorithm with PSO and GA baselines."""

from lfa.exceptions import Error, InvalidArgument, UnknownFunction, PreconditionViolation, \
    NoTrace, OutputError
from lfa.levy import RngState, LevyConfig, levy_step, levy_perturbation, uniform_in_bounds
from lfa.benchmarks import BenchmarkSpec, EvalCounter, lookup, standard_function
from lfa.firefly import FireflyParams, Firefly, Swarm, attractiveness, distance, move_toward, \
    random_walk, generation_step, run
from lfa.baselines import PsoParams, GaParams, pso_run, ga_run
from lfa.harness import RunResult, TrialStats, run_trials, format_report, export_trace
