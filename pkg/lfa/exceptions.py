"""Contains all exceptions generated by the module."""

import psys


class Error(Exception):
    """A base class for all exceptions the module throws."""

    def __init__(self, error, *args, **kwargs):
        super(Error, self).__init__(
            error.format(*args, **kwargs) if args or kwargs else error)


class InvalidArgument(Error):
    """
    Raised on attempt to configure an algorithm or to call a function with an
    invalid argument.
    """

    def __init__(self, *args, **kwargs):
        super(InvalidArgument, self).__init__(*args, **kwargs)


class UnknownFunction(InvalidArgument):
    """Raised on attempt to look up a benchmark function that doesn't exist."""

    def __init__(self, name):
        self.__name = name
        super(UnknownFunction, self).__init__("Unknown function: {0}", name)

    def name(self):
        """Returns the requested function name."""

        return self.__name


class PreconditionViolation(Error):
    """
    Raised on attempt to perform an operation whose precondition doesn't hold
    (for example, to move a firefly towards a dimmer one).
    """

    def __init__(self, *args, **kwargs):
        super(PreconditionViolation, self).__init__(*args, **kwargs)


class NoTrace(Error):
    """Raised on attempt to export a trace of a run that wasn't traced."""

    def __init__(self):
        super(NoTrace, self).__init__(
            "The run result carries no trace (run it with trace=True)")


class OutputError(Error):
    """Raised when a trace or a report can't be written."""

    def __init__(self, path, error):
        self.__path = path
        super(OutputError, self).__init__(
            "Unable to write '{0}': {1}.", path, psys.e(error))

    def path(self):
        """Returns the path that failed to be written."""

        return self.__path


class LogicalError(Error):
    """Logical error."""

    def __init__(self, *args, **kwargs):
        super(LogicalError, self).__init__("Logical error")
