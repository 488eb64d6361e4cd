class BugscopeError(Exception):
    """Base class for errors raised by bugscope."""


class PreconditionError(BugscopeError, ValueError):
    pass


class DisconnectedGraphError(PreconditionError):
    def __init__(self, message="betweenness is only defined here for connected graphs"):
        super().__init__(message)


class UndefinedWeightError(BugscopeError):
    """An edge is close to every vertex of the host graph, so its weight is undefined."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} is close to every vertex; weight undefined")


class CapExceededError(BugscopeError):
    """Input size is beyond what a built-in routine supports."""


class GraphFormatError(BugscopeError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", char {column}" if column is not None else "") + ")"
        super().__init__(message + where)
