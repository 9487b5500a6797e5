"""Exception hierarchy.

Errors are split by how the command line reports them: input problems
(bad files, bad shapes, empty graphs) versus numerical problems (dangling
nodes under the reject policy, iteration caps, failed solves).
"""


class FJRankError(Exception):
    """Base class for every error raised by this package."""


class InputError(FJRankError):
    """The caller supplied malformed or inconsistent data."""


class NumericalError(FJRankError):
    """A computation could not produce a result that meets its contract."""


class EmptyGraph(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class DimensionMismatch(InputError):
    pass


class DegenerateSize(InputError):
    pass


class DanglingNode(NumericalError):
    """A node has no out-links and the policy forbids repairing it."""

    def __init__(self, index, label):
        self.index = index
        self.label = label
        super().__init__(
            f"node {label!r} (index {index}) has out-degree 0; "
            "choose a dangling policy other than 'reject' to repair it"
        )


class IterationCapExceeded(NumericalError):
    """An iterative method needed more steps than ``max_iter`` allows.

    ``required`` is set when the step count is known in advance (series
    truncation); ``last`` and ``residual`` when it is not (fixed point).
    """

    def __init__(self, message, *, required=None, last=None, residual=None):
        self.required = required
        self.last = last
        self.residual = residual
        super().__init__(message)


class NumericalFailure(NumericalError):
    pass


class ProblemTooLarge(InputError):
    pass
