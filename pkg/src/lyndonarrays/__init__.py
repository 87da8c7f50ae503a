"""Lyndon and inverse Lyndon arrays built by one nearest-greater-suffix pass.

Positions are framed and 1-based: position 1 holds ``#``, positions 2..N-1 the
word and N the ``$`` sentinel.  Arrays come back as 0-based Python lists whose
entry ``k`` belongs to framed position ``k + 1``.
"""

from .errors import (
    ContractViolation,
    InputMismatch,
    InvalidInput,
    InvalidQuery,
    LinearityViolation,
    LyndonArrayError,
    ModeMismatch,
    OutOfBounds,
    UnknownSymbol,
    VerificationFailure,
)
from .gen import Family, FamilySpec, generate, splitmix64
from .lce import LceCounters, SmartLce
from .ngs import InverseResult, build_inverse, recover_lambda_inv
from .nss import StandardResult, build_standard
from .rules import ComparisonVerdict, Outcome, build_joint, compare_pairs, shortcut_compare
from .text import AlphabetOrder, FramedText, SentinelMode, frame

__version__ = "0.1.0"


def lyndon_array(word, order: AlphabetOrder | None = None) -> list[int]:
    """Lyndon array of ``word`` over framed positions."""
    return build_standard(frame(word, order, SentinelMode.STANDARD)).lam


def inverse_lyndon_array(word, order: AlphabetOrder | None = None) -> list[int]:
    """Inverse Lyndon array of ``word`` over framed positions."""
    return build_inverse(frame(word, order, SentinelMode.INVERSE)).lam_inv


__all__ = [
    "AlphabetOrder", "ComparisonVerdict", "ContractViolation", "Family", "FamilySpec",
    "FramedText", "InputMismatch", "InvalidInput", "InvalidQuery", "InverseResult",
    "LceCounters", "LinearityViolation", "LyndonArrayError", "ModeMismatch", "OutOfBounds",
    "Outcome", "SentinelMode", "SmartLce", "StandardResult", "UnknownSymbol",
    "VerificationFailure", "build_inverse", "build_joint", "build_standard", "compare_pairs",
    "frame", "generate", "inverse_lyndon_array", "lyndon_array", "recover_lambda_inv",
    "shortcut_compare", "splitmix64",
]
