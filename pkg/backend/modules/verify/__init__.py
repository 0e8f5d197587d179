"""검증 스위트 모듈.

기준표 재현, 항등식, 작용 법칙, 덮개 관계, Ĥ, 기저, 재구성, 분해 정리,
부호 합 항등식을 CheckResult 목록으로 확인합니다.

Modules:
    config: 병렬도, 시드, 표본 수
    schemas: RunConfig, CheckResult, VerifyReport
    tables: 기준 H_λ, Ĥ_λ 값
    identities: c^r_p, ĉ^r_p 의 s_i, ∂_i 항등식
    laws: 무작위 다항식 위의 작용 법칙
    suites: 스위트별 작업 계획
    runner: 동기/프로세스 풀 실행
"""

from .config import VerifyConfig, verify_config
from .schemas import SUITES, CheckResult, EnumeratedPartition, OutputFormat, RunConfig, SuiteName, VerifyReport
from .tables import double_eta_table, hat_table
from .identities import Tally, identity_checks
from .laws import descends_checks, elem_checks, ideal_stability_checks, law_checks, random_polynomial
from .suites import (
    basis_checks,
    cover_checks,
    dimension_checks,
    finalize,
    hat_cover_checks,
    hat_sum_checks,
    plan_jobs,
    reconstruct_checks,
    splitting_checks,
    table_checks,
    top_class_checks,
)
from .runner import run_jobs, run_suites

__all__ = [
    # Config
    "VerifyConfig",
    "verify_config",
    # Schemas
    "SUITES",
    "CheckResult",
    "EnumeratedPartition",
    "OutputFormat",
    "RunConfig",
    "SuiteName",
    "VerifyReport",
    # Reference values
    "double_eta_table",
    "hat_table",
    # Checks
    "Tally",
    "identity_checks",
    "law_checks",
    "ideal_stability_checks",
    "descends_checks",
    "elem_checks",
    "random_polynomial",
    "table_checks",
    "cover_checks",
    "reconstruct_checks",
    "top_class_checks",
    "hat_cover_checks",
    "hat_sum_checks",
    "basis_checks",
    "dimension_checks",
    "splitting_checks",
    # Runner
    "plan_jobs",
    "finalize",
    "run_jobs",
    "run_suites",
]
