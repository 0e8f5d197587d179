"""이중 eta 다항식 모듈.

Modules:
    config: 정수성 검사, 단계별 정규형, 캐시 크기
    raising: R^λ 상승 연산자 전개
    star: ⋆ 치환 (supp_m 규칙, a/b 중간 인수)
    polynomials: H_λ, H'_λ, Ĥ_λ, 단일 eta, 최상위 클래스, ∂ 재구성
"""

from .config import EtaConfig, eta_config
from .raising import RaisingMonomial, expand_raising, raising_pairs
from .star import StarContext, star_apply
from .polynomials import (
    double_eta,
    double_eta_dual,
    double_eta_hat,
    single_eta,
    top_class,
    eta_via_divided_differences,
    get_eta_cache_stats,
)

__all__ = [
    # Config
    "EtaConfig",
    "eta_config",
    # Raising operators
    "RaisingMonomial",
    "expand_raising",
    "raising_pairs",
    # Star substitution
    "StarContext",
    "star_apply",
    # Polynomials
    "double_eta",
    "double_eta_dual",
    "double_eta_hat",
    "single_eta",
    "top_class",
    "eta_via_divided_differences",
    "get_eta_cache_stats",
]
