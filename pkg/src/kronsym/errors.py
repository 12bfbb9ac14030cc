"""Exception hierarchy shared by every module."""


class KronsymError(Exception):
    pass


class GraphError(KronsymError, ValueError):
    pass


class IndexOutOfRange(GraphError):
    pass


class LoopRejected(GraphError):
    pass


class SizeCapExceeded(KronsymError):
    pass


class EnumerationCapExceeded(KronsymError):
    pass


class GroupNotEnumerated(KronsymError):
    pass


class BudgetExceeded(KronsymError):
    """Search ran out of budget.  ``result`` holds the best flagged answer, if any."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NoEdges(KronsymError, ValueError):
    pass


class LabelRangeMismatch(KronsymError, ValueError):
    pass


class NotBipartite(KronsymError, ValueError):
    pass


class InvalidPower(KronsymError, ValueError):
    pass


class NotBooleanSquareEdge(KronsymError, ValueError):
    pass


class DomainError(KronsymError, ValueError):
    pass


class PreconditionViolated(KronsymError, ValueError):
    pass


class ParseError(KronsymError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class UnknownSuite(KronsymError, KeyError):
    pass
