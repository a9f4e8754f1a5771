"""Exception types shared across the toolkit."""


class ParameterError(ValueError):
    """Elements of groups with different parameters were mixed, or a
    parameter is outside its documented domain."""


class InadmissibleSignatureError(ValueError):
    """A genus formula produced a non-integral or negative value."""


class SearchExhaustedError(RuntimeError):
    """An exhaustive search found no admissible object within its bounds."""


class SamplingError(RuntimeError):
    """Rejection sampling of curve points failed within the retry budget."""


class ConstructionError(RuntimeError):
    """A construction whose invariants should hold by design failed one of
    them; this signals an implementation bug, not bad input."""
