"""Exact multiplicity-preserving zero decomposition over the rationals.

Wu characteristic sets drive the decomposition; a dual-space oracle
computes local multiplicities at rational points for certification.
"""

from .certify import certify
from .dualspace import dual_basis, multiplicity
from .errors import (CapExceededError, DegenerateInputError, NotZeroDimensionalError,
                     ParseError, PointNotZeroError, UnsupportedInputError, UsageError,
                     ZeroDecompError)
from .mzdecomp import Component, DecompositionResult, Strategy, zero_decomp_multi
from .parser import parse_polynomial, parse_system
from .polyring import Polynomial, VarOrder, prem, prem_seq
from .solve import rational_zeros, system_zeros
from .wucharset import basic_set, wu_charset

__all__ = [
    "CapExceededError", "Component", "DecompositionResult", "DegenerateInputError",
    "NotZeroDimensionalError", "ParseError", "PointNotZeroError", "Polynomial", "Strategy",
    "UnsupportedInputError", "UsageError", "VarOrder", "ZeroDecompError", "basic_set",
    "certify", "dual_basis", "multiplicity", "parse_polynomial", "parse_system", "prem",
    "prem_seq", "rational_zeros", "system_zeros", "wu_charset", "zero_decomp_multi",
]
