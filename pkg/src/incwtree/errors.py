"""Exception hierarchy shared by every module of the package."""


class TreeIdealError(Exception):
    """Base class for all errors raised by incwtree."""


# graph construction / lookup
class GraphError(TreeIdealError, ValueError):
    pass


class DuplicateVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class NonpositiveWeight(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class ParseError(GraphError):
    pass


# preconditions on the shape of the input
class PreconditionError(TreeIdealError, ValueError):
    """Input is well formed but violates a structural precondition."""


class NotATree(PreconditionError):
    pass


class NotIncreasingTree(PreconditionError):
    pass


class TrivialTree(PreconditionError):
    pass


class NotAPath(TreeIdealError, ValueError):
    pass


class IsolatedVertex(TreeIdealError, ValueError):
    pass


class NotIndependent(TreeIdealError, ValueError):
    pass


class NotInNeighborhood(TreeIdealError, ValueError):
    pass


class NotACover(TreeIdealError, ValueError):
    pass


class MultipleRoots(TreeIdealError, RuntimeError):
    """A component of G_S met the neighborhood of S more than once.

    Cannot happen for an increasing tree; seeing it means a bug or bad input.
    """


class TooManyVertices(TreeIdealError, ValueError):
    pass


class InvalidPower(TreeIdealError, ValueError):
    pass


# monomial oracle
class AmbientMismatch(TreeIdealError, ValueError):
    pass


class Overflow(TreeIdealError, OverflowError):
    pass


class ZeroIdeal(TreeIdealError, ValueError):
    pass


class UnitIdeal(TreeIdealError, ValueError):
    pass


class SearchSpaceTooLarge(TreeIdealError, RuntimeError):
    def __init__(self, size: int, budget: int):
        super().__init__(
            f"witness search space has {size} exponent vectors, budget is {budget}; "
            f"raise the budget (--budget) to at least {size} to proceed"
        )
        self.size = size
        self.budget = budget
