"""Backend modules package.

짝수 직교 Grassmannian 의 double eta 다항식 계산 모듈들입니다.

Modules:
    weyl: W̃_∞ 부호 순열, 타입 k-strict 분할, 덮개 분류
    polyring: Z[b,t] 다항식, 이름 붙은 족, s_i / ∂_i 작용
    quotient: J^(k) 정규형과 B^(k)[t] 기저 전개
    eta: H_λ(c|t), Ĥ_λ(c|t), 최상위 클래스
    schubert: type A Schubert 다항식과 분해 정리
    verify: 검증 스위트

NOTE: quotient -> eta 의존은 순환 import 방지를 위해 함수 안에서 lazy import 합니다.
"""

from .errors import (
    EtaError,
    PartitionError,
    PermutationError,
    ParseError,
    InexactDivisionError,
    IntegralityError,
    RankDefectError,
)
from .weyl import SignedPermutation, KStrictPartition, TypedPartition, parse_typed, parse_shape
from .polyring import Polynomial, weyl_action, divided_difference
from .quotient import normal_form, eq_mod_ideal, expand_in_b_basis, expand_in_eta_basis
from .eta import double_eta, double_eta_hat, single_eta, top_class, eta_via_divided_differences
from .schubert import Permutation, schubert_poly, splitting_rhs
from .verify import RunConfig, VerifyReport, run_suites

__all__ = [
    # Errors
    "EtaError",
    "PartitionError",
    "PermutationError",
    "ParseError",
    "InexactDivisionError",
    "IntegralityError",
    "RankDefectError",
    # Weyl group
    "SignedPermutation",
    "KStrictPartition",
    "TypedPartition",
    "parse_typed",
    "parse_shape",
    # Polynomial ring
    "Polynomial",
    "weyl_action",
    "divided_difference",
    # Quotient
    "normal_form",
    "eq_mod_ideal",
    "expand_in_b_basis",
    "expand_in_eta_basis",
    # Eta
    "double_eta",
    "double_eta_hat",
    "single_eta",
    "top_class",
    "eta_via_divided_differences",
    # Schubert
    "Permutation",
    "schubert_poly",
    "splitting_rhs",
    # Verify
    "RunConfig",
    "VerifyReport",
    "run_suites",
]
