"""Synthesis error classes."""


class SynthesisError(Exception):
    """Error while building a spectrum or its time-domain counterpart."""


class PreconditionFailed(SynthesisError):
    """The construction is not defined for this generator."""


class ResolutionError(SynthesisError):
    """Requested grids cannot be resolved by the available samples."""


class ComplexValued(SynthesisError):
    """A function that should be real carries imaginary parts."""
