"""Finite one-sided dirings and their left modules as validated tables."""

from .diring import DiringTable, verify_left_diring
from .groups import FiniteAbelianGroup, validate_abelian_group
from .modules import LeftModuleTable, verify_module
from .validation import ValidationReport

__version__ = "0.1.0"

__all__ = [
    "DiringTable",
    "FiniteAbelianGroup",
    "LeftModuleTable",
    "ValidationReport",
    "validate_abelian_group",
    "verify_left_diring",
    "verify_module",
    "__version__",
]
