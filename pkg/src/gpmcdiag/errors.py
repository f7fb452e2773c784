"""Exception types shared by all modules."""


class InputError(ValueError):
    """Invalid argument: out-of-range id, malformed spec, bad parameter."""


class ConsistencyError(InputError):
    """A fault pair would contain an edge incident to a faulty vertex."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class GraphMismatchError(InputError):
    """Two values bound to different graphs were combined."""
