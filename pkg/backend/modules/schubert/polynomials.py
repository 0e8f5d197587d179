"""A형 Schubert 다항식과 분해 정리.

S_{w_0} = t_1^{n-1} t_2^{n-2} ⋯ t_{n-1} 에서 시작해,
u(i) < u(i+1) 이면 S_u = ∂^A_i S_{u s_i} 로 내려갑니다.

∂^A_i f = (f - s_i f) / (t_i - t_{i+1}). W̃_∞ 의 ∂_i 와 분모 부호가 반대입니다.

분해 정리: H_λ(c|t) ≡ Σ H_μ(c) S_{u^{-1}}(-t)  (mod J^(k)),
합은 u w_μ = w_λ, ℓ(w_λ) = ℓ(u) + ℓ(w_μ), u ∈ S_∞ 인 모든 (u, μ).
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from ..eta import eta_config, single_eta
from ..polyring import Polynomial, t
from ..polyring.variables import t_name
from ..weyl import TypedPartition, enumerate_typed, partition_to_perm
from .permutation import Permutation

logger = logging.getLogger(__name__)


def divided_difference_a(i: int, poly: Polynomial) -> Polynomial:
    """∂^A_i f = (f - s_i f) / (t_i - t_{i+1})."""
    if i < 1:
        raise ValueError(f"Type A divided difference needs i >= 1, got {i}")
    numerator = poly - poly.swap(t_name(i), t_name(i + 1))
    if numerator.is_zero:
        return Polynomial.zero()
    return numerator.divide_linear(t_name(i), t_name(i + 1), -1)


def _staircase(n: int) -> Polynomial:
    result = Polynomial.one()
    for i in range(1, n):
        result = result * t(i) ** (n - i)
    return result


@lru_cache(maxsize=eta_config.CACHE_SIZE)
def _schubert(window: Tuple[int, ...], n: int) -> Polynomial:
    if window == tuple(range(n, 0, -1)):
        return _staircase(n)
    u = Permutation(window)
    ascent = next(i for i in range(1, n) if window[i - 1] < window[i])
    return divided_difference_a(ascent, _schubert(u.swap(ascent).extended(n), n))


def schubert_poly(u: Permutation) -> Polynomial:
    """Lascoux–Schützenberger Schubert 다항식 S_u(t).

    Args:
        u: S_n 원소 (고정점 확장에 대해 불변)

    Returns:
        Polynomial: t 변수만의 차수 ℓ(u) 동차 다항식

    Examples:
        >>> str(schubert_poly(Permutation((1, 3, 2))))
        't1 + t2'
    """
    n = max(u.size, 1)
    return _schubert(u.extended(n), n)


# ============================================================
# 축약 분해와 분해 정리 우변
# ============================================================

def reduced_right_factors(lam: TypedPartition) -> List[Tuple[Permutation, TypedPartition]]:
    """u w_μ = w_λ 가 길이 가법적인 모든 (u, μ), u ∈ S_∞.

    u 는 w_λ 창 밖을 고정하므로 |μ| <= |λ| 인 μ 만 보면 충분합니다.
    """
    w = partition_to_perm(lam)
    length = w.length()
    result = []
    for mu in enumerate_typed(lam.k, lam.size, lam.size):
        w_mu = partition_to_perm(mu)
        u = w * w_mu.inverse()
        if not u.is_unsigned():
            continue
        if u.length() + w_mu.length() == length:
            result.append((Permutation.from_signed(u), mu))
    logger.debug(f"[Schubert] λ={lam}: 축약 분해 {len(result)}개")
    return result


def splitting_rhs(lam: TypedPartition) -> Polynomial:
    """Σ H_μ(c) S_{u^{-1}}(-t)."""
    total = Polynomial.zero()
    for u, mu in reduced_right_factors(lam):
        total = total + single_eta(mu) * schubert_poly(u.inverse()).negate_t()
    return total
