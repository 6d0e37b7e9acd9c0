"""Polynomial multiplication by multipoint Kronecker substitution."""

from ._core import (
    Error,
    InexactError,
    KsParams,
    ParseError,
    PreconditionError,
    ReconstructionError,
    RingError,
    UnderflowError,
    bivariate_mod,
    choose_variant,
    derive_params,
    ks_mul,
    mod_mul,
    reconstruct_overlapped,
    schoolbook,
)

__all__ = [
    "Error",
    "InexactError",
    "KsParams",
    "ParseError",
    "PreconditionError",
    "ReconstructionError",
    "RingError",
    "UnderflowError",
    "bivariate_mod",
    "choose_variant",
    "derive_params",
    "ks1",
    "ks2",
    "ks3",
    "ks4",
    "ks_mul",
    "mod_mul",
    "reconstruct_overlapped",
    "schoolbook",
]


def ks1(f, g, bits=0):
    """Standard Kronecker substitution: one product at 2^N."""
    return ks_mul("ks1", f, g, bits)


def ks2(f, g, bits=0):
    """Reciprocal variant: products at 2^N and 2^-N."""
    return ks_mul("ks2", f, g, bits)


def ks3(f, g, bits=0):
    """Negated variant: products at 2^N and -2^N."""
    return ks_mul("ks3", f, g, bits)


def ks4(f, g, bits=0):
    """Four-point variant: products at +-2^N and +-2^-N."""
    return ks_mul("ks4", f, g, bits)
