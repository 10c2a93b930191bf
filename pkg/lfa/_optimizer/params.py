"""Provides a base class for validated algorithm parameters."""

import numbers

import numpy as np

from lfa.exceptions import InvalidArgument


def check_option(option, value, valid):
    """Raises InvalidArgument if `value` isn't valid for the option."""

    if not valid(value):
        raise InvalidArgument("Invalid value for option {0}: {1!r}", option, value)

    return value


def real(low=None, high=None, low_open=False, high_open=False):
    """Returns a validator of real numbers within the given interval."""

    def valid(value):
        if not isinstance(value, numbers.Real) or isinstance(value, bool) or value != value:
            return False

        if low is not None and (value <= low if low_open else value < low):
            return False

        if high is not None and (value >= high if high_open else value > high):
            return False

        return True

    return valid


def integer(low=None):
    """Returns a validator of integers not less than `low`."""

    def valid(value):
        return (
            isinstance(value, numbers.Integral) and not isinstance(value, bool) and
            (low is None or value >= low))

    return valid


def boolean(value):
    return isinstance(value, bool)


def positive_vector_or_none(value):
    if value is None:
        return True

    try:
        vector = np.atleast_1d(np.asarray(value, dtype=float))
    except (TypeError, ValueError):
        return False

    return vector.ndim == 1 and vector.size > 0 and bool(np.all(vector > 0))


class Params:
    """A set of algorithm parameters.

    Subclasses declare their options in ``_OPTIONS`` as ``name: (default,
    validator)`` pairs; every option may be overridden by a keyword argument.
    All values are validated eagerly, so invalid configurations are rejected
    before any run starts.
    """

    _OPTIONS = {
        # Population size n
        "population": (40, integer(2)),

        # Generation cap
        "max_generations": (10000, integer(0)),

        # Stop when best-so-far improves less than epsilon over `window` generations
        "epsilon": (1e-5, real(0, low_open=True)),
        "window": (10, integer(1)),

        # A run succeeds when |best - f*| <= success_threshold
        "success_threshold": (1e-3, real(0, low_open=True)),

        # Capture a per-generation position trace
        "trace": (False, boolean),
    }

    def __init__(self, **options):
        for option in options:
            if option not in self._OPTIONS:
                raise InvalidArgument("Invalid option: {0}", option)

        for option, (default, valid) in self._OPTIONS.items():
            value = check_option(option, options.get(option, default), valid)

            if isinstance(value, numbers.Integral) and not isinstance(value, bool):
                value = int(value)
            elif isinstance(value, numbers.Real) and not isinstance(value, bool):
                value = float(value)
            elif value is not None and not isinstance(value, bool):
                value = np.atleast_1d(np.asarray(value, dtype=float))

            setattr(self, option, value)

    def __eq__(self, other):
        return type(self) is type(other) and self.as_dict() == other.as_dict()

    def __repr__(self):
        return "{0}({1})".format(type(self).__name__, ", ".join(
            "{0}={1!r}".format(option, value) for option, value in sorted(self.as_dict().items())))

    def as_dict(self):
        """Returns the options as a JSON-serializable dictionary."""

        options = {}

        for option in self._OPTIONS:
            value = getattr(self, option)
            if isinstance(value, np.ndarray):
                value = value.tolist()
            options[option] = value

        return options

    def replace(self, **options):
        """Returns a copy with the given options overridden."""

        merged = self.as_dict()
        merged.update(options)
        return type(self)(**merged)
