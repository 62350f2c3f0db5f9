"""Exception types shared across the package."""


class QUmbralError(Exception):
    """Base class for all errors raised by qumbral."""


class ContextMismatch(QUmbralError, ValueError):
    """Operands were built over different values of q."""


class TruncationError(QUmbralError, ValueError):
    """A coefficient beyond a series' known truncation was requested."""


class UnsupportedOperation(QUmbralError, NotImplementedError):
    pass


class ConsistencyError(QUmbralError, RuntimeError):
    """Two independent constructions of the same object disagreed.

    This always signals a bug in the package, never a property of the
    mathematics being audited.
    """


class NonOrthonormalFamily(QUmbralError, ValueError):
    """The family's polynomials do not form a basis on the requested range."""
