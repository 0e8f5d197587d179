"""이름 붙은 다항식 족.

c_p, e^r_j / h^r_j, c^r_p, a^s_p, b^s_k, b̃^s_k, f-변형, ĉ^r_p 를 만듭니다.
모든 함수는 순수 함수이고 결과는 불변이므로 메모이즈합니다.

규칙:
    - c_0 = b_0 = 1, 음수 첨자는 0
    - c_p = b_p (p<k), b_k + b̃_k (p=k), 2 b_p (p>k)
    - r < 0 이면 h^r_j := e^{-r}_j
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .polynomial import Polynomial
from .variables import b_name, bt_name, t_name

_HALF = Fraction(1, 2)
_ZERO = Polynomial.zero()
_ONE = Polynomial.one()


class FVariant(str, Enum):
    """f_k 의 선택: b_k, b̃_k, 또는 a_k = c_k / 2."""

    BK = "b_k"
    BTILDE_K = "bt_k"
    AK = "a_k"


# ============================================================
# 변수
# ============================================================

def b(p: int) -> Polynomial:
    if p < 0:
        return _ZERO
    if p == 0:
        return _ONE
    return Polynomial.var(b_name(p))


def btilde(k: int) -> Polynomial:
    return Polynomial.var(bt_name(k))


def t(i: int) -> Polynomial:
    """t_i. 음수 첨자는 t_{-i} := t_i 규약을 따릅니다."""
    if i == 0:
        raise ValueError("t_0 does not exist")
    return Polynomial.var(t_name(abs(i)))


@lru_cache(maxsize=None)
def c(p: int, k: int) -> Polynomial:
    if p < 0:
        return _ZERO
    if p == 0:
        return _ONE
    if p < k:
        return b(p)
    if p == k:
        return b(k) + btilde(k)
    return b(p) * 2


# ============================================================
# 대칭 다항식
# ============================================================

@lru_cache(maxsize=None)
def e_sym(j: int, r: int, negate: bool = False) -> Polynomial:
    """t_1..t_|r| 의 기본 대칭 다항식 e_j. negate면 t -> -t."""
    r = abs(r)
    if j < 0 or j > r:
        return _ZERO
    if j == 0:
        return _ONE
    x = -t(r) if negate else t(r)
    return e_sym(j, r - 1, negate) + x * e_sym(j - 1, r - 1, negate)


@lru_cache(maxsize=None)
def h_sym(j: int, r: int, negate: bool = False) -> Polynomial:
    """t_1..t_r 의 완전 동차 대칭 다항식 h_j. r<0 이면 e^{-r}_j."""
    if r < 0:
        return e_sym(j, -r, negate)
    if j < 0:
        return _ZERO
    if j == 0:
        return _ONE
    if r == 0:
        return _ZERO
    x = -t(r) if negate else t(r)
    return h_sym(j, r - 1, negate) + x * h_sym(j - 1, r, negate)


def _tail(p: int, r: int, k: int, start: int) -> Polynomial:
    total = _ZERO
    for j in range(start, p + 1):
        total = total + c(p - j, k) * h_sym(j, r, True)
    return total


# ============================================================
# c^r_p, a^s_p, b^s_k, f-변형
# ============================================================

@lru_cache(maxsize=None)
def c_r(p: int, r: int, k: int) -> Polynomial:
    """c^r_p = Σ_{j=0}^p c_{p-j} h^r_j(-t)."""
    if p < 0:
        return _ZERO
    return _tail(p, r, k, 0)


@lru_cache(maxsize=None)
def a_s(p: int, s: int, k: int) -> Polynomial:
    """a^s_p = c_p/2 + Σ_{j>=1} c_{p-j} h^s_j(-t)."""
    if p < 0:
        return _ZERO
    return c(p, k) * _HALF + _tail(p, s, k, 1)


def f_k(k: int, variant: FVariant) -> Polynomial:
    if variant is FVariant.BK:
        return b(k)
    if variant is FVariant.BTILDE_K:
        return btilde(k)
    return c(k, k) * _HALF


@lru_cache(maxsize=None)
def f_s(s: int, k: int, variant: FVariant) -> Polynomial:
    return f_k(k, variant) + _tail(k, s, k, 1)


def b_s(s: int, k: int) -> Polynomial:
    return f_s(s, k, FVariant.BK)


def btilde_s(s: int, k: int) -> Polynomial:
    return f_s(s, k, FVariant.BTILDE_K)


def ftilde(k: int, variant: FVariant) -> Polynomial:
    """f̃_k = c_k - f_k."""
    return c(k, k) - f_k(k, variant)


def ftilde_s(s: int, k: int, variant: FVariant) -> Polynomial:
    """f̃^s_k = c_k - 2 f_k + f^s_k."""
    return c(k, k) - f_k(k, variant) * 2 + f_s(s, k, variant)


# ============================================================
# ĉ^r_p
# ============================================================

def row_variant(row: int) -> FVariant:
    """홀수 행은 b̃_k, 짝수 행은 b_k 보정을 씁니다."""
    return FVariant.BTILDE_K if row % 2 == 1 else FVariant.BK


@lru_cache(maxsize=None)
def c_hat(p: int, r: int, k: int, variant: FVariant) -> Polynomial:
    """ĉ^r_p: r = k-p < 0 일 때만 (2f_k - c_k) e^{p-k}_{p-k}(-t) 를 더합니다."""
    base = c_r(p, r, k)
    if r == k - p and r < 0:
        correction = f_k(k, variant) * 2 - c(k, k)
        return base + correction * e_sym(p - k, p - k, True)
    return base
