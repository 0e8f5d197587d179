"""이중 eta 다항식 H_λ(c|t), Ĥ_λ(c|t) 와 관련 구성.

    H_λ(c|t) = 2^{-ℓ_k(λ)} R^λ ⋆ ĉ^{β(λ)}_λ
    Ĥ_λ(c|t) = 2^{-ℓ_k(λ)} R^λ ⋆ ĉ^{β̄(λ)}_λ
    H_{λ_0}  = 2^{k-n} R^{λ_0} ⋆ ĉ^{(1-n, ..., -k)}_{λ_0}   (C 는 모든 쌍)

결과는 불변 객체이므로 첨자별로 메모이즈합니다.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import IntegralityError, PartitionError
from ..polyring import Polynomial, c_hat, c_r, divided_difference, row_variant
from ..quotient import normal_form
from ..weyl import KStrictPartition, TypedPartition, beta, beta_bar, reduced_word_to_top, top_partition
from .config import eta_config
from .raising import RaisingMonomial, expand_raising
from .star import StarContext, star_apply

logger = logging.getLogger(__name__)


def _evaluate(terms: Iterable[RaisingMonomial], ctx: StarContext, ell_k: int, label: str) -> Polynomial:
    total = Polynomial.zero()
    for R in terms:
        total = total + star_apply(R, ctx)
    result = total * Fraction(1, 2 ** ell_k)
    if eta_config.CHECK_INTEGRALITY and not result.is_integral():
        logger.error(f"[Eta] 정수 계수가 아님: {label}")
        raise IntegralityError(f"{label} has non-integral coefficients")
    return result


# ============================================================
# H_λ, H'_λ, Ĥ_λ
# ============================================================

@lru_cache(maxsize=eta_config.CACHE_SIZE)
def double_eta(lam: TypedPartition) -> Polynomial:
    """H_λ(c|t).

    Args:
        lam: 타입 k-strict 분할

    Returns:
        Polynomial: 차수 |λ| 의 동차 정수 계수 다항식

    Raises:
        IntegralityError: 2^{-ℓ_k} 배 후 정수 계수가 아님

    Examples:
        >>> str(double_eta(TypedPartition((1,), 1, 1)))
        'b1 - t1'
    """
    if not lam.parts:
        return Polynomial.one()
    ctx = StarContext(k=lam.k, beta=beta(lam), type=lam.type, m=lam.ell_k + 1)
    terms = expand_raising(lam)
    logger.debug(f"[Eta] H_{lam} 계산: {len(terms)} 항")
    return _evaluate(terms, ctx, lam.ell_k, f"H_{lam}")


def double_eta_dual(lam: TypedPartition) -> Polynomial:
    """H'_λ: 반대 타입의 H. 타입 0 이면 H_λ."""
    return double_eta(lam.dual())


@lru_cache(maxsize=eta_config.CACHE_SIZE)
def double_eta_hat(shape: KStrictPartition) -> Polynomial:
    """Ĥ_λ(c|t). 모든 행에 β̄ 와 홀짝 ĉ 규칙을 씁니다.

    어떤 λ_i = k 이면 H_λ + H'_λ, 아니면 H_λ 와 같습니다.
    """
    if not shape.parts:
        return Polynomial.one()
    ctx = StarContext(k=shape.k, beta=beta_bar(shape), type=0, m=shape.ell_k + 1)
    terms = expand_raising(shape)
    logger.debug(f"[Eta] Ĥ_{shape} 계산: {len(terms)} 항")
    return _evaluate(terms, ctx, shape.ell_k, f"Ĥ_{shape}")


def single_eta(lam: TypedPartition) -> Polynomial:
    """H_λ(c) = H_λ(c|0)."""
    return double_eta(lam).at_zero_t()


# ============================================================
# 최상위 클래스와 분할 차분 재구성
# ============================================================

def _column_choices(budget: int, width: int) -> Iterator[Tuple[int, ...]]:
    """합이 budget 이하인 길이 width 의 음이 아닌 정수 벡터."""
    for exps in itertools.product(range(budget + 1), repeat=width):
        if sum(exps) <= budget:
            yield exps


def _all_pairs_terms(parts: Tuple[int, ...]) -> Dict[Tuple[Tuple[int, ...], FrozenSet[int]], int]:
    """∏_{i<j} (1 - R_ij)/(1 + R_ij) λ 의 (ν, 건드린 행) 별 계수.

    (1 - x)/(1 + x) = 1 + Σ_{d>=1} 2(-1)^d x^d. 열 j 를 ℓ 부터 내려가며 고르면
    열 j 를 마친 뒤 ν_j 는 더 바뀌지 않으므로 음수가 되는 가지를 그 자리에서 버립니다.
    """
    ell = len(parts)
    grouped: Dict[Tuple[Tuple[int, ...], FrozenSet[int]], int] = {}

    def column(j: int, nu: List[int], touched: FrozenSet[int], coeff: int) -> None:
        if j < 2:
            key = (tuple(nu), touched)
            grouped[key] = grouped.get(key, 0) + coeff
            return
        for exps in _column_choices(nu[j - 1], j - 1):
            raised = list(nu)
            rows = set(touched)
            weight = coeff
            for i, d in enumerate(exps, start=1):
                if d:
                    raised[i - 1] += d
                    raised[j - 1] -= d
                    rows.update((i, j))
                    weight *= 2 * (-1) ** d
            column(j - 1, raised, frozenset(rows), weight)

    column(ell, list(parts), frozenset(), 1)
    return {key: coeff for key, coeff in grouped.items() if coeff}


@lru_cache(maxsize=None)
def top_class(k: int, n: int) -> Polynomial:
    """λ_0 = (n+k-1, ..., 2k) 의 H 를 모든 쌍의 상승 연산자 곱에서 직접 계산합니다.

    β_i = i - n. R 이 건드린 행은 c^{β_i}_{ν_i}, 건드리지 않은 행은 ĉ^{β_i}_{ν_i}
    (홀수 행 b̃_k, 짝수 행 b_k 보정) 를 씁니다. w_λ 도 ⋆ 치환도 거치지 않습니다.
    """
    if n < k:
        raise PartitionError(f"n must be >= k (n={n}, k={k})")
    parts = top_partition(k, n).parts
    ell = len(parts)
    if ell == 0:
        return Polynomial.one()
    total = Polynomial.zero()
    for (nu, touched), coeff in _all_pairs_terms(parts).items():
        product = Polynomial.constant(coeff)
        for row, p in enumerate(nu, start=1):
            r = row - n
            product = product * (c_r(p, r, k) if row in touched else c_hat(p, r, k, row_variant(row)))
            if product.is_zero:
                break
        total = total + product
    result = total * Fraction(1, 2 ** ell)
    if eta_config.CHECK_INTEGRALITY and not result.is_integral():
        logger.error(f"[Eta] 정수 계수가 아님: top class (k={k}, n={n})")
        raise IntegralityError(f"top class (k={k}, n={n}) has non-integral coefficients")
    return result


def eta_via_divided_differences(lam: TypedPartition, k: int, n: int) -> Polynomial:
    """∂_{a_1} ∘ ⋯ ∘ ∂_{a_r} (H_{λ_0}).

    일반적으로 J^(k) 를 법으로만 H_λ 와 같습니다.
    """
    word = reduced_word_to_top(lam, k, n)
    result = top_class(k, n)
    for index in reversed(word):
        result = divided_difference(index, result, k)
        if eta_config.REDUCE_STEPS:
            result = normal_form(result, k)
    logger.debug(f"[Eta] ∂ 재구성: λ={lam}, 단어 길이 {len(word)}")
    return result


def get_eta_cache_stats() -> Dict[str, Dict[str, int]]:
    """메모 상태 정보를 반환합니다.

    Returns:
        dict: 함수별 hits, misses, currsize
    """
    stats = {}
    for name, fn in (
        ("double_eta", double_eta),
        ("double_eta_hat", double_eta_hat),
        ("top_class", top_class),
    ):
        info = fn.cache_info()
        stats[name] = {"hits": info.hits, "misses": info.misses, "currsize": info.currsize}
    return stats
