"""Exact permutation statistics, gamma expansions, J-fraction moments and
colored Laguerre histories, with finite-range identity verification."""

from .perm import Permutation
from .colored import ColoredPermutation, D_poly, d_poly
from .poly import Poly, gamma_expand, expand_SZ_basis
from .cfrac import CFFamily, Family, JFraction, jf_moments, jacobi_rogers
from .laguerre import LaguerreHistory, phi, phi_inverse
from .verify import BudgetExceeded, VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "Permutation", "ColoredPermutation", "D_poly", "d_poly",
    "Poly", "gamma_expand", "expand_SZ_basis",
    "CFFamily", "Family", "JFraction", "jf_moments", "jacobi_rogers",
    "LaguerreHistory", "phi", "phi_inverse",
    "BudgetExceeded", "VerificationReport", "verify_all",
]
