"""Exception types shared across the package."""


class ExtphError(Exception):
    pass


class DuplicateVertexValues(ExtphError):
    pass


class InvalidEpsilon(ExtphError):
    pass


class FiltrationMismatch(ExtphError):
    pass


class UnknownNode(ExtphError):
    pass


class NotARoot(ExtphError):
    pass


class SameTree(ExtphError):
    pass


class IsRoot(ExtphError):
    pass


class DifferentTrees(ExtphError):
    pass


class NotAncestor(ExtphError):
    pass


class InvalidLca(ExtphError):
    pass


class NotACycle(ExtphError):
    pass


class NotChordless(ExtphError):
    pass


class HasBridge(ExtphError):
    pass


class OracleCapExceeded(ExtphError):
    pass


class BatchItemError(ExtphError):
    """Wraps a per-graph failure inside a batch with the offending index."""

    def __init__(self, index, original):
        self.index = index
        self.original = original
        super().__init__(f"graph {index}: {original}")
