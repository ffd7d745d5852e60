"""
Exception hierarchy shared by every package.

All errors derive from :class:`OracleError`; the ones describing bad input also
derive from ``ValueError`` so callers that only know the built-ins still work.
"""


class OracleError(Exception):
    """Root of every error raised by this code base."""


class ConfigError(OracleError, ValueError):
    """Invalid configuration value."""


# --- GRAPH INPUT ---

class GraphError(OracleError, ValueError):
    """Malformed or unusable input graph."""


class GraphFormatError(GraphError):
    """A graph file line that cannot be parsed."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DisconnectedGraphError(GraphError):
    """The input graph is not connected; ``pair`` holds two unreachable vertices."""

    def __init__(self, u, v):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.pair = (u, v)


# --- QUERIES ---

class QueryError(OracleError, ValueError):
    """A query that cannot be answered."""


class FailureSetError(QueryError):
    """Failure set of the wrong size, with repeats, or with unknown vertices."""


class VertexError(QueryError):
    """Query vertex outside the graph or inside the failure set."""


# --- PRECONDITIONS ---

class PreconditionError(OracleError, ValueError):
    """An operation was called outside its documented domain."""


class NestednessError(PreconditionError):
    """A segment-query batch violates the nested property."""

    def __init__(self, first, second, reason):
        super().__init__(f"queries {first} and {second} are not nested: {reason}")
        self.pair = (first, second)


# --- INTERNAL ---

class TableLookupError(OracleError, LookupError):
    """A case rule needed a table entry that preprocessing did not store."""

    def __init__(self, table, key):
        super().__init__(f"no {table} entry for vertex {key}")
        self.table = table
        self.key = key
