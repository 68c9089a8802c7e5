"""Exception types shared across the package."""


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of budget before it could decide.

    This is the "unknown" outcome: it never means the object is absent.
    """


class Infeasible(ValueError):
    """The requested object provably does not exist (or is excluded by a theorem)."""


class ConstructionError(RuntimeError):
    """A construction that is guaranteed to succeed did not.

    Raised when an existence result says the search must succeed; treat it
    as a bug signal rather than as a counterexample.
    """


class MatchingDeficient(RuntimeError):
    """The lifting bipartite graph has no perfect matching.

    ``certificate`` holds the :class:`~hypercycles.bipartite.HallCertificate`
    witnessing the deficiency.
    """

    def __init__(self, message, certificate):
        super().__init__(message)
        self.certificate = certificate


class TooLarge(ValueError):
    """The instance exceeds the size cap of an exact (exponential) search."""


class Unsupported(ValueError):
    """No constructive case covers the parameters (outside every guarantee)."""
