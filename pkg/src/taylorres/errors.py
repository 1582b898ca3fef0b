class EnvelopeError(ValueError):
    """Input exceeds a supported size envelope (generator count, variables)."""


class PreconditionError(ValueError):
    """An operation was called on an ideal outside its hypotheses."""
