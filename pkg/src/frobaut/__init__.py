"""Automorphism groups of Frobenius groups (prod C_p^d) : C_n."""

from .autstruct import AutReport, analyze, aut_order, structure_string
from .repdecomp import KernelActionSpec, PrimeComponentSpec, ValidationError, validate_and_decompose

__version__ = "0.1.0"

__all__ = [
    "AutReport",
    "KernelActionSpec",
    "PrimeComponentSpec",
    "ValidationError",
    "analyze",
    "aut_order",
    "structure_string",
    "validate_and_decompose",
]
