"""Command-line interface: single runs, benchmark sweeps and trace export."""

import argparse
import logging
import os
import sys

import psys

from lfa import benchmarks, harness
from lfa.exceptions import Error, InvalidArgument, OutputError

LOG = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

SEED_ENV = "LFA_SEED"
"""Environment variable overriding the default seed."""


class UsageError(Exception):
    """Raised by the argument parser instead of exiting."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("{0}\n{1}: error: {2}".format(self.format_usage().rstrip(), self.prog, message))


# Per-algorithm options: (flag, parameter name, type, help)
_COMMON_OPTIONS = [
    ("--pop", "population", int, "population size (default: 40)"),
    ("--epsilon", "epsilon", float, "stop tolerance on best-so-far improvement over the window (default: 1e-5)"),
    ("--window", "window", int, "stagnation window in generations (default: 10)"),
    ("--max-generations", "max_generations", int, "generation cap (default: 10000)"),
    ("--success-threshold", "success_threshold", float, "success when |best - f*| <= threshold (default: 1e-3)"),
]

_ALGORITHM_OPTIONS = {
    "lfa": [
        ("--alpha", "alpha", float, "LFA randomization weight in [0, 1] (default: 0.2)"),
        ("--gamma", "gamma", float, "LFA light absorption coefficient (default: 1)"),
        ("--lambda", "lam", float, "LFA Lévy exponent in (1, 3] (default: 1.5)"),
        ("--beta0", "beta0", float, "LFA attractiveness at r=0 (default: 1)"),
        ("--m", "m", float, "LFA attenuation exponent >= 1 (default: 2)"),
        ("--t-min", "t_min", float, "LFA minimum Lévy step length (default: 1)"),
    ],
    "pso": [
        ("--c1", "c1", float, "PSO cognitive weight (default: 2)"),
        ("--c2", "c2", float, "PSO social weight (default: 2)"),
    ],
    "ga": [
        ("--mutation", "mutation", float, "GA per-gene mutation probability (default: 0.05)"),
        ("--crossover", "crossover", float, "GA crossover probability (default: 0.95)"),
        ("--tournament", "tournament", int, "GA tournament size (default: 2)"),
    ],
}


def main(argv=None):
    """The entry point: returns the process exit status."""

    try:
        args = _parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    _setup_logging(args.debug)

    try:
        return args.handler(args)
    except InvalidArgument as e:
        print("Error: {0}".format(e), file=sys.stderr)
        return EXIT_USAGE
    except Error as e:
        print("Error: {0}".format(e), file=sys.stderr)
        return EXIT_FAILURE
    except EnvironmentError as e:
        print("Error: {0}.".format(psys.e(e)), file=sys.stderr)
        return EXIT_FAILURE


def parse_and_dispatch(argv):
    """An alias of :py:func:`main` taking an explicit argument list."""

    return main(argv)


def _run(args):
    _check_options(args, [args.algo])
    spec, params, run = _configure(args, args.algo, args.fn)
    result = run(spec, params, args.seed)
    _emit(result.to_json() + "\n", args.output)
    return EXIT_OK


def _trace(args):
    _check_options(args, [args.algo])
    spec, params, run = _configure(args, args.algo, args.fn, trace=True)
    result = run(spec, params, args.seed)
    harness.export_trace(result, args.output)
    LOG.info("Trace of %s generation(s) written to %s.", result.generations, args.output)
    return EXIT_OK


def _bench(args):
    algorithms = _split(args.algos)
    functions = _split(args.fns) if args.fns else benchmarks.names()

    if args.trials < 1:
        raise InvalidArgument("Invalid number of trials: {0}", args.trials)

    if args.jobs < 1:
        raise InvalidArgument("Invalid number of jobs: {0}", args.jobs)

    for name in algorithms:
        harness.algorithm(name)

    _check_options(args, algorithms)

    # Validate the whole matrix before any computation
    matrix = [
        (name, _configure(args, name, function))
        for function in functions for name in algorithms]

    stats = []
    for name, (spec, params, _) in matrix:
        LOG.info("Running %s trial(s) of %s on %s (d=%s)...", args.trials, name, spec.name, spec.dimension)
        stats.append(harness.run_trials(name, spec, params, args.trials, args.seed, args.jobs))

    _emit(harness.format_report(stats, args.format), args.output)
    return EXIT_OK


def _list(args):
    rows = benchmarks.registry_table()
    document = "".join(
        "{name:<12} d={dimension:<4} [{lower}, {upper}]  f*={optimum_value!r}  {title}\n".format(**row)
        for row in rows)
    _emit(document, args.output)
    return EXIT_OK


def _configure(args, name, function, trace=False):
    """Builds (benchmark, parameters, run function) from the parsed arguments."""

    run, params_class = harness.algorithm(name)
    spec = benchmarks.lookup(function, args.dim)

    options = {}
    for _, option, _, _ in _COMMON_OPTIONS + _ALGORITHM_OPTIONS[name]:
        value = getattr(args, option, None)
        if value is not None:
            options[option] = value

    if trace:
        options["trace"] = True

    return spec, params_class(**options), run


def _check_options(args, algorithms):
    """Rejects options of algorithms that aren't going to be run."""

    for algorithm, options in sorted(_ALGORITHM_OPTIONS.items()):
        if algorithm in algorithms:
            continue

        for flag, option, _, _ in options:
            if getattr(args, option, None) is not None:
                raise InvalidArgument("Option {0} doesn't apply to {1}", flag, ", ".join(algorithms))


def _emit(document, path):
    if path is None:
        sys.stdout.write(document)
        return

    try:
        with open(path, "w") as output_file:
            output_file.write(document)
    except EnvironmentError as e:
        raise OutputError(path, e)


def _split(value):
    return [item.strip() for item in value.split(",") if item.strip()]


def _default_seed():
    seed = os.environ.get(SEED_ENV)
    if seed is None:
        return 0

    try:
        return int(seed)
    except ValueError:
        raise UsageError("Invalid {0} value: {1!r}".format(SEED_ENV, seed))


def _parser():
    parser = _ArgumentParser(prog="lfa",
        description="Lévy-flight firefly algorithm with PSO and GA baselines.")
    parser.add_argument("--debug", action="store_true", help="enable debug logging")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_ArgumentParser)
    subparsers.required = True

    seed = _default_seed()

    def add_options(subparser, algorithms):
        subparser.add_argument("--dim", type=int, default=None,
            help="dimension (default: the function's registry default)")
        subparser.add_argument("--seed", type=int, default=seed,
            help="seed (default: ${0} or 0)".format(SEED_ENV))
        subparser.add_argument("--debug", action="store_true", default=argparse.SUPPRESS,
            help="enable debug logging")

        for flag, option, option_type, help in _COMMON_OPTIONS:
            subparser.add_argument(flag, dest=option, type=option_type, default=None, help=help)

        for algorithm in algorithms:
            for flag, option, option_type, help in _ALGORITHM_OPTIONS[algorithm]:
                subparser.add_argument(flag, dest=option, type=option_type, default=None, help=help)

    for command, handler, help in (
        ("run", _run, "execute one seeded run and print its result as JSON"),
        ("trace", _trace, "execute one seeded run and write its position trace as CSV"),
    ):
        subparser = subparsers.add_parser(command, help=help)
        subparser.add_argument("--algo", default="lfa", choices=sorted(harness.ALGORITHMS),
            help="algorithm (default: lfa)")
        subparser.add_argument("--fn", default="ackley", help="benchmark function (default: ackley)")
        subparser.add_argument("-o", "--output", default="trace.csv" if command == "trace" else None,
            help="output path (default: {0})".format("trace.csv" if command == "trace" else "stdout"))
        add_options(subparser, sorted(harness.ALGORITHMS))
        subparser.set_defaults(handler=handler)

    subparser = subparsers.add_parser("bench", help="run repeated trials over a function x algorithm matrix")
    subparser.add_argument("--fns", default=None,
        help="comma-separated benchmark functions (default: all)")
    subparser.add_argument("--algos", default="lfa,pso,ga",
        help="comma-separated algorithms (default: lfa,pso,ga)")
    subparser.add_argument("--trials", type=int, default=100, help="trials per cell (default: 100)")
    subparser.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    subparser.add_argument("--format", default="table", choices=harness.FORMATS,
        help="report format (default: table)")
    subparser.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    add_options(subparser, sorted(harness.ALGORITHMS))
    subparser.set_defaults(handler=_bench)

    subparser = subparsers.add_parser("list", help="print the benchmark registry")
    subparser.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    subparser.set_defaults(handler=_list)

    return parser


def _setup_logging(debug):
    try:
        import pcli.log
    except ImportError:
        logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s",
            level=logging.DEBUG if debug else logging.WARNING)
    else:
        pcli.log.setup(debug_mode=debug)


if __name__ == "__main__":
    sys.exit(main())
