"""B^(k)[t] 의 b_λ 기저와 H_λ 기저 전개.

b_λ = 2^{-ℓ_k(λ)} c_λ. 정규형에서 b_λ 의 선도 단항식은 λ 자신에 대응하는
기약 단항식이고, 나머지는 지배 순서로 더 큰 분할에 대응합니다.
따라서 사전식으로 가장 작은 분할부터 벗겨내면 삼각 풀이가 됩니다.
"""

import heapq
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import IntegralityError, PartitionError, RankDefectError
from ..polyring import Monomial, Polynomial, PolynomialPayload, b, btilde, c, parse_variable, to_payload
from ..weyl import TypedPartition, typed_partitions_of
from .rewriting import split_monomial, normal_form

logger = logging.getLogger(__name__)

BasisExpansion = Dict[TypedPartition, Polynomial]

# 잔여항 벗기기 반복 상한
_MAX_PEEL_STEPS = 100_000


@lru_cache(maxsize=None)
def b_lambda(lam: TypedPartition) -> Polynomial:
    """b_λ = 2^{-ℓ_k} c_λ. 타입 행 m = ℓ_k + 1 은 b_k (타입 1) 또는 b̃_k (타입 2)."""
    k = lam.k
    m = lam.ell_k + 1
    product = Polynomial.one()
    for row, part in enumerate(lam.parts, start=1):
        if lam.type > 0 and row == m:
            product = product * (b(k) if lam.type == 1 else btilde(k))
        else:
            product = product * c(part, k)
    result = product * Fraction(1, 2 ** lam.ell_k)
    if not result.is_integral():
        raise IntegralityError(f"b_lambda({lam}) is not integral")
    return result


@lru_cache(maxsize=None)
def _b_lambda_normal_form(lam: TypedPartition) -> Polynomial:
    return normal_form(b_lambda(lam), lam.k)


@lru_cache(maxsize=None)
def monomial_partition(b_part: Monomial, k: int) -> TypedPartition:
    """기약 b-단항식 ↔ 타입 분할.

    Raises:
        PartitionError: b_k 와 b̃_k 가 함께 나타남 (J^(k) 정규형이 아님)
    """
    parts: List[int] = []
    kinds = set()
    for name, exp in b_part:
        kind, index = parse_variable(name)
        parts.extend([index] * exp)
        if index == k:
            kinds.add(kind)
    if len(kinds) > 1:
        raise PartitionError(f"b_{k} and bt_{k} in one monomial is not reduced: {b_part}")
    type_ = 0 if not kinds else (2 if "bt" in kinds else 1)
    return TypedPartition(tuple(sorted(parts, reverse=True)), k, type_)


def typed_partition_count(k: int, d: int) -> int:
    """크기 d 의 타입 k-strict 분할 개수."""
    return len(typed_partitions_of(k, d))


def _peel_key(lam: TypedPartition) -> Tuple:
    return lam.size, lam.parts, lam.type


@lru_cache(maxsize=None)
def _b_lambda_rows(lam: TypedPartition) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """b_λ 정규형의 (b-단항식, 계수). b_λ 는 t 를 포함하지 않습니다."""
    return tuple(_b_lambda_normal_form(lam).terms())


def expand_in_b_basis(poly: Polynomial, k: int) -> BasisExpansion:
    """poly = Σ a_λ(t) b_λ (mod J^(k)) 의 계수.

    잔여항을 b-단항식별 t-계수 사전으로 들고, 가장 작은 분할부터 힙에서 꺼내 벗겨냅니다.

    Raises:
        RankDefectError: 선도항이 제거되지 않음
    """
    residual: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for monomial, coeff in normal_form(poly, k).terms():
        b_part, t_part = split_monomial(monomial)
        residual.setdefault(b_part, {})[t_part] = coeff
    heap = [(_peel_key(monomial_partition(b_part, k)), b_part) for b_part in residual]
    heapq.heapify(heap)
    result: BasisExpansion = {}
    for _ in range(_MAX_PEEL_STEPS):
        if not heap:
            return result
        _, leading = heapq.heappop(heap)
        coefficient = {t_part: v for t_part, v in residual.pop(leading, {}).items() if v}
        if not coefficient:
            continue
        lam = monomial_partition(leading, k)
        rows = dict(_b_lambda_rows(lam))
        if rows.get(leading) != 1:
            raise RankDefectError(f"Leading monomial for {lam} survived elimination")
        result[lam] = result.get(lam, Polynomial.zero()) + Polynomial.from_terms(coefficient.items())
        for b_part, scale in rows.items():
            if b_part == leading:
                continue
            row = residual.get(b_part)
            if row is None:
                row = residual[b_part] = {}
                heapq.heappush(heap, (_peel_key(monomial_partition(b_part, k)), b_part))
            for t_part, v in coefficient.items():
                row[t_part] = row.get(t_part, Fraction(0)) - v * scale
    raise RankDefectError("Basis expansion did not terminate")


def expand_in_eta_basis(poly: Polynomial, k: int) -> BasisExpansion:
    """poly = Σ a_λ(t) H_λ(c|t) (mod J^(k)) 의 계수.

    높은 차수부터, 같은 차수에서는 사전식으로 작은 분할부터 벗겨냅니다.
    """
    residual = expand_in_b_basis(poly, k)
    result: BasisExpansion = {}
    for _ in range(_MAX_PEEL_STEPS):
        residual = {lam: coeff for lam, coeff in residual.items() if not coeff.is_zero}
        if not residual:
            return result
        lam = min(residual, key=lambda mu: (-mu.size, mu.parts, mu.type))
        coefficient = residual[lam]
        result[lam] = coefficient
        for mu, entry in _eta_in_b_basis(lam).items():
            residual[mu] = residual.get(mu, Polynomial.zero()) - coefficient * entry
        if not residual[lam].is_zero:
            raise RankDefectError(f"H_{lam} coefficient survived elimination")
    raise RankDefectError("Eta basis expansion did not terminate")


@lru_cache(maxsize=None)
def _eta_in_b_basis(lam: TypedPartition) -> Dict[TypedPartition, Polynomial]:
    from ..eta import double_eta

    return expand_in_b_basis(double_eta(lam), lam.k)


# ============================================================
# 직렬화
# ============================================================

class BasisEntry(BaseModel):
    """기저 전개의 한 항."""

    model_config = ConfigDict(extra="forbid")

    partition: str = Field(..., description='"2,1:t1" 형식의 분할')
    coeff: PolynomialPayload


def expansion_entries(expansion: BasisExpansion) -> List[BasisEntry]:
    return [
        BasisEntry(partition=str(lam), coeff=to_payload(expansion[lam]))
        for lam in sorted(expansion, key=TypedPartition.sort_key)
    ]
