"""Exception types shared across the package."""


class CompnumError(Exception):
    """Base class for every package-specific error."""


class VertexTypeError(CompnumError, TypeError):
    """Vertex identifier is not a plain int or str."""


class GraphValidationError(CompnumError, ValueError):
    """Input fails the structural contract of Graph or Digraph."""


class DuplicateVertexError(GraphValidationError):
    pass


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class UndeclaredEndpointError(GraphValidationError):
    pass


class PreconditionError(CompnumError, ValueError):
    """An operation was called outside its stated preconditions."""


class BudgetExceededError(CompnumError, RuntimeError):
    """An enumeration or search exceeded its configured resource cap."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class LemmaCondViolation(CompnumError, RuntimeError):
    """No clique vertex satisfies selection condition (a) or (b).

    Such an instance would contradict the selection argument the recursive
    construction rests on, so the full instance rides along for inspection
    instead of being patched over.
    """

    def __init__(self, message, graph=None, report=None):
        super().__init__(message)
        self.graph = graph
        self.report = report


class HypothesisAnomaly(CompnumError, RuntimeError):
    """A structural identity promised by the input class failed at runtime."""

    def __init__(self, message, graph=None):
        super().__init__(message)
        self.graph = graph


class ConstructionError(CompnumError, RuntimeError):
    """A witness builder reached a state its contract rules out.

    Carries the offending graph so failures surface as analyzable instances.
    """

    def __init__(self, message, graph=None):
        super().__init__(message)
        self.graph = graph


class UnsupportedClassError(CompnumError, ValueError):
    """No construction route applies to this graph."""


class GenerationError(CompnumError, RuntimeError):
    """A generator could not produce or validate the requested instance."""
