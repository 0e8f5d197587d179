"""W̃_∞ 의 Z[b,t] 작용과 분할 차분.

i >= 1: s_i 는 t_i <-> t_{i+1} 교환.
i = 0 : (t_1, t_2) -> (-t_2, -t_1),
        s_0(b_p)  = b_p - 2(t_1+t_2) c^2_{p-1}   (p < k)
        s_0(b_p)  = b_p -  (t_1+t_2) c^2_{p-1}   (p >= k)
        s_0(b̃_k) = b̃_k - (t_1+t_2) c^2_{k-1}

∂_0 f = (f - s_0 f) / (t_1 + t_2),  ∂_i f = (f - s_i f) / (t_{i+1} - t_i).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from ..errors import InexactDivisionError
from .families import c_r, t
from .polynomial import Monomial, Polynomial
from .variables import parse_variable, t_name

logger = logging.getLogger(__name__)

# s_i 상과 ∂_i 상의 메모 크기
_ACTION_CACHE_SIZE = 4096


@lru_cache(maxsize=None)
def _s0_image(name: str, k: int) -> Polynomial:
    kind, index = parse_variable(name)
    t12 = t(1) + t(2)
    if kind == "bt":
        if index != k:
            raise ValueError(f"{name} does not belong to the ring for k={k}")
        return Polynomial.var(name) - t12 * c_r(k - 1, 2, k)
    factor = 2 if index < k else 1
    return Polynomial.var(name) - t12 * c_r(index - 1, 2, k) * factor


@lru_cache(maxsize=None)
def _s0_b_monomial(b_part: Monomial, k: int) -> Polynomial:
    result = Polynomial.one()
    for name, exp in b_part:
        result = result * _s0_image(name, k) ** exp
    return result


def _s0_on_t(terms: List[Tuple[Monomial, Fraction]]) -> Polynomial:
    """t_1 -> -t_2, t_2 -> -t_1 을 단항식별로 적용합니다."""
    renamed = {"t1": "t2", "t2": "t1"}
    images = []
    for monomial, coeff in terms:
        flips = sum(exp for name, exp in monomial if name in renamed)
        renamed_monomial = tuple((renamed.get(name, name), exp) for name, exp in monomial)
        images.append((renamed_monomial, -coeff if flips % 2 else coeff))
    return Polynomial.from_terms(images)


def _s0_act(poly: Polynomial, k: int) -> Polynomial:
    """b 부분별로 묶어 s_0(B)·s_0(T) 로 계산합니다."""
    groups: Dict[Monomial, List[Tuple[Monomial, Fraction]]] = {}
    for monomial, coeff in poly.terms():
        b_part = tuple((name, exp) for name, exp in monomial if not name.startswith("t"))
        t_part = tuple((name, exp) for name, exp in monomial if name.startswith("t"))
        groups.setdefault(b_part, []).append((t_part, coeff))
    total = Polynomial.zero()
    for b_part, t_terms in groups.items():
        total = total + _s0_b_monomial(b_part, k) * _s0_on_t(t_terms)
    return total


@lru_cache(maxsize=_ACTION_CACHE_SIZE)
def _act(i: int, poly: Polynomial, k: int) -> Polynomial:
    if i == 0:
        return _s0_act(poly, k)
    return poly.swap(t_name(i), t_name(i + 1))


def weyl_action(i: int, poly: Polynomial, k: int) -> Polynomial:
    """s_i 의 환 자기동형 작용.

    Args:
        i: 단순 반사 첨자 (>= 0)
        poly: Z[b,t] 원소
        k: b̃_k 의 k

    Returns:
        Polynomial: s_i(poly)
    """
    if i < 0:
        raise ValueError(f"Simple reflection index must be >= 0, got {i}")
    return _act(i, poly, k)


def root_form(i: int) -> Polynomial:
    """∂_i 의 분모: t_1 + t_2 (i=0), t_{i+1} - t_i (i>=1)."""
    if i == 0:
        return t(1) + t(2)
    return t(i + 1) - t(i)


def divided_difference(i: int, poly: Polynomial, k: int) -> Polynomial:
    """∂_i f. 분자가 나누어떨어지지 않으면 InexactDivisionError."""
    if i < 0:
        raise ValueError(f"Simple reflection index must be >= 0, got {i}")
    return _divide(i, poly, k)


@lru_cache(maxsize=_ACTION_CACHE_SIZE)
def _divide(i: int, poly: Polynomial, k: int) -> Polynomial:
    numerator = poly - _act(i, poly, k)
    if numerator.is_zero:
        return Polynomial.zero()
    try:
        if i == 0:
            return numerator.divide_linear(t_name(1), t_name(2), 1)
        return numerator.divide_linear(t_name(i + 1), t_name(i), -1)
    except InexactDivisionError:
        logger.error(f"[Weyl] ∂_{i} 분자가 나누어떨어지지 않음 (k={k})")
        raise


def divided_difference_01(poly: Polynomial, k: int) -> Polynomial:
    """(∂_0 + ∂_1) f."""
    return divided_difference(0, poly, k) + divided_difference(1, poly, k)
