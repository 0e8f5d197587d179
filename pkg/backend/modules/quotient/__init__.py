"""B^(k)[t] = Z[b,t] / J^(k) 몫환 모듈.

Modules:
    rewriting: J^(k) 재작성 규칙, 정규형, 기약 단항식 개수
    basis: b_λ 기저, H_λ 기저 전개
"""

from .rewriting import (
    RewriteSystem,
    normal_form,
    eq_mod_ideal,
    is_reduced,
    split_monomial,
    reduced_monomial_count,
)
from .basis import (
    BasisExpansion,
    BasisEntry,
    b_lambda,
    monomial_partition,
    typed_partition_count,
    expand_in_b_basis,
    expand_in_eta_basis,
    expansion_entries,
)

__all__ = [
    # Rewriting
    "RewriteSystem",
    "normal_form",
    "eq_mod_ideal",
    "is_reduced",
    "split_monomial",
    "reduced_monomial_count",
    # Basis
    "BasisExpansion",
    "BasisEntry",
    "b_lambda",
    "monomial_partition",
    "typed_partition_count",
    "expand_in_b_basis",
    "expand_in_eta_basis",
    "expansion_entries",
]
