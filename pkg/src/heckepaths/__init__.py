"""Exact Littelmann/Hecke path combinatorics over Kac-Moody root systems."""

from .errors import (
    CapHit,
    CrossCheckMismatch,
    FoldNotApplicable,
    FormatError,
    HeightBoundTooSmall,
    HPLError,
    NonLambdaPath,
    NotDominant,
    NotGCM,
    NotHecke,
    NotSymmetrizable,
    OperatorUndefined,
    OutOfRange,
    UnsupportedType,
)
from .root_system import (
    CosetRep,
    KacMoodyMatrix,
    RealRoot,
    RootGeneratingSystem,
    WeylElement,
    validate_gcm,
)

__all__ = [
    "CapHit",
    "CosetRep",
    "CrossCheckMismatch",
    "FoldNotApplicable",
    "FormatError",
    "HPLError",
    "HeightBoundTooSmall",
    "KacMoodyMatrix",
    "NonLambdaPath",
    "NotDominant",
    "NotGCM",
    "NotHecke",
    "NotSymmetrizable",
    "OperatorUndefined",
    "OutOfRange",
    "RealRoot",
    "RootGeneratingSystem",
    "UnsupportedType",
    "validate_gcm",
    "WeylElement",
]
