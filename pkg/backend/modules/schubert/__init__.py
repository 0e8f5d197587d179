"""A형 Schubert 다항식과 분해 정리 모듈.

Modules:
    permutation: S_∞ 순열
    polynomials: S_u(t), ∂^A_i, 축약 분해, 분해 정리 우변
"""

from .permutation import Permutation
from .polynomials import divided_difference_a, schubert_poly, reduced_right_factors, splitting_rhs

__all__ = [
    "Permutation",
    "divided_difference_a",
    "schubert_poly",
    "reduced_right_factors",
    "splitting_rhs",
]
