"""Exception hierarchy shared by the DSL, interpreters and engine."""


class HetJoinError(Exception):
    """Base class for every error raised by this package."""


class IllFormedIndex(HetJoinError, IndexError):
    """An index (or index set) points past the end of the shape it is used with."""


class TagMismatch(HetJoinError, TypeError):
    """A boxed element's runtime tag disagrees with its recorded type."""


class PatternTypeError(HetJoinError, TypeError):
    """A pattern term is ill-typed, e.g. the body's arity differs from the context."""


class PayloadTypeError(HetJoinError, TypeError):
    """A notification carries a value of the wrong type for its source position."""


class UnknownSource(HetJoinError, IndexError):
    """A notification names a source position outside the join's arity."""


class TraceOrderError(HetJoinError, ValueError):
    """A replay trace is not ordered by (time, source)."""


class InstanceAborted(HetJoinError, RuntimeError):
    """The join instance was aborted by an earlier error and accepts no more input."""


class ContractViolation(HetJoinError, RuntimeError):
    """An interceptor touched a mailbox outside the positions it was registered for."""
