"""Exception types shared across the package."""


class IcxError(Exception):
    """Base class for all package errors."""


class GraphError(IcxError, ValueError):
    """Malformed graph, complex, family or vertex-set input."""


class SchemaError(IcxError, ValueError):
    """JSON input that does not match the documented file schemas."""


class ResourceCapExceeded(IcxError, RuntimeError):
    """A configured size cap (facet count, face count) was hit."""
