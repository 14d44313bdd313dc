"""Exception hierarchy shared by every module."""


class Homog3Error(Exception):
    """Base class for all library errors."""


class SignatureError(Homog3Error, ValueError):
    """Two structures do not share a color signature."""


class ArgumentError(Homog3Error, ValueError):
    """An argument is outside its documented range."""


class ResourceLimitError(Homog3Error):
    """A search or enumeration would exceed a configured budget.

    ``name`` is the budget key (see :mod:`homog3.budgets`), ``limit`` its
    current value and ``required`` the amount the call would have needed.
    """

    def __init__(self, name, limit, required=None):
        self.name = name
        self.limit = limit
        self.required = required
        msg = f"budget {name!r} exceeded (limit {limit}"
        if required is not None:
            msg += f", required {required}"
        super().__init__(msg + ")")


class NotQuotientableError(Homog3Error):
    """A pair of classes realizes more than one cross color."""

    def __init__(self, classes, colors):
        self.classes = classes
        self.colors = colors
        super().__init__(f"classes {classes[0]} and {classes[1]} realize colors {sorted(colors)}")


class NotSemilinearError(Homog3Error):
    """Some edge lies in two distinct maximal monochromatic cliques."""

    def __init__(self, edge, cliques):
        self.edge = edge
        self.cliques = cliques
        super().__init__(f"edge {edge} lies in distinct maximal cliques {cliques[0]} and {cliques[1]}")


class InconclusiveError(Homog3Error):
    """The input is too small for a statistical decision."""
