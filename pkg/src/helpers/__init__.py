from .errors import (
    ComplexError,
    ComplexTooLarge,
    NakayamaError,
    NotTDeterminedError,
    ParseError,
    UsageError,
)
from .linalg import GF2, QQ, ExactMatrix, PrimeField, RationalField, get_field

__all__ = [
    "ComplexError",
    "ComplexTooLarge",
    "ExactMatrix",
    "GF2",
    "NakayamaError",
    "NotTDeterminedError",
    "ParseError",
    "PrimeField",
    "QQ",
    "RationalField",
    "UsageError",
    "get_field",
]
