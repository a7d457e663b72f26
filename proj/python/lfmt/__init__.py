"""Local fractional derivatives, quaternionic operators and identity checks."""

from ._lfmt import (
    Error,
    ModeViolation,
    ParseError,
    TruncationError,
    UnknownIdentity,
    apply,
    canonical,
    cos_alpha,
    diff,
    equal,
    evaluate,
    identities,
    sin_alpha,
    ml_exp,
    verify,
)

__all__ = [
    "Error",
    "ModeViolation",
    "ParseError",
    "TruncationError",
    "UnknownIdentity",
    "apply",
    "canonical",
    "cos_alpha",
    "diff",
    "equal",
    "evaluate",
    "identities",
    "ml_exp",
    "sin_alpha",
    "verify",
]
