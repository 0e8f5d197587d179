"""Z[b,t] 위의 s_i, ∂_i 항등식 검사.

각 함수는 항등식 묶음 하나를 주어진 범위에서 모두 확인하고
CheckResult 하나로 요약합니다 (실패 시 첫 반례 기록).
"""

import logging
from typing import Callable, List, Tuple

from ..polyring import (
    FVariant,
    Polynomial,
    a_s,
    b,
    btilde,
    c,
    c_hat,
    c_r,
    divided_difference,
    divided_difference_01,
    f_k,
    f_s,
    ftilde,
    ftilde_s,
    h_sym,
    t,
    weyl_action,
)
from ..quotient import eq_mod_ideal
from .schemas import CheckResult

logger = logging.getLogger(__name__)

SUITE = "identities"
HAT_VARIANTS = (FVariant.BK, FVariant.BTILDE_K)

# 두 인수 곱의 ∂_i 공식을 확인하는 i 의 상한
_PRODUCT_MAX_I = 3


class Tally:
    """반례 수집기."""

    def __init__(self, name: str, suite: str = SUITE):
        self.name = name
        self.suite = suite
        self.count = 0
        self.failures: List[str] = []

    def check(self, ok: bool, label: str) -> None:
        self.count += 1
        if not ok:
            self.failures.append(label)

    def equal(self, lhs: Polynomial, rhs: Polynomial, label: str) -> None:
        self.check(lhs == rhs, label)

    def result(self) -> CheckResult:
        if self.failures:
            detail = f"{len(self.failures)}/{self.count} failed, first: {self.failures[0]}"
            logger.warning(f"[Verify] {self.name}: {detail}")
        else:
            detail = f"{self.count} cases"
        return CheckResult(suite=self.suite, name=self.name, passed=not self.failures, detail=detail)


def _d(i: int, f: Polynomial, k: int) -> Polynomial:
    return divided_difference(i, f, k)


def _s(i: int, f: Polynomial, k: int) -> Polynomial:
    return weyl_action(i, f, k)


# ============================================================
# c^r_p 의 점화식과 s_i 작용
# ============================================================

def check_c_recursion(k: int, max_p: int, max_r: int) -> CheckResult:
    """r > 0: c^r_p = c^{r-1}_p - t_r c^r_{p-1},  r <= 0: c^r_p = c^{r-1}_p + t_{r-1} c^r_{p-1}."""
    tally = Tally(f"c_recursion k={k}")
    for r in range(-max_r, max_r + 1):
        for p in range(0, max_p + 1):
            if r > 0:
                rhs = c_r(p, r - 1, k) - t(r) * c_r(p - 1, r, k)
            else:
                rhs = c_r(p, r - 1, k) + t(r - 1) * c_r(p - 1, r, k)
            tally.equal(c_r(p, r, k), rhs, f"p={p} r={r}")
    return tally.result()


def check_simple_action_on_c(k: int, max_p: int, max_r: int) -> CheckResult:
    tally = Tally(f"s_i_on_c k={k}")
    for p in range(0, max_p + 1):
        for r in range(-max_r, max_r + 1):
            for i in range(1, max_r + 2):
                lhs = _s(i, c_r(p, r, k), k)
                if r == i:
                    rhs = c_r(p, i + 1, k) + t(i) * c_r(p - 1, i + 1, k)
                elif r == -i:
                    rhs = c_r(p, -i + 1, k) - t(i + 1) * c_r(p - 1, -i + 1, k)
                else:
                    rhs = c_r(p, r, k)
                tally.equal(lhs, rhs, f"i={i} p={p} r={r}")
            lhs = _s(0, c_r(p, r, k), k)
            t12, t1t2 = t(1) + t(2), t(1) * t(2)
            if abs(r) >= 2:
                rhs = c_r(p, r, k)
            elif r == 1:
                rhs = c_r(p, 2, k) - t(1) * c_r(p - 1, 2, k)
            elif r == 0:
                rhs = c_r(p, 2, k) - t12 * c_r(p - 1, 2, k) + t1t2 * c_r(p - 2, 2, k)
            else:
                rhs = c_r(p, 1, k) - t12 * c_r(p - 1, 1, k) + t1t2 * c_r(p - 2, 1, k)
            tally.equal(lhs, rhs, f"i=0 p={p} r={r}")
    return tally.result()


def _truncated_product(factors: List[List[Polynomial]], max_p: int) -> List[Polynomial]:
    """u 의 멱급수 곱을 u^max_p 까지."""
    result = [Polynomial.one()] + [Polynomial.zero()] * max_p
    for factor in factors:
        result = [
            sum((result[p - j] * factor[j] for j in range(min(p, len(factor) - 1) + 1)), Polynomial.zero())
            for p in range(max_p + 1)
        ]
    return result


def check_generating_series(k: int, max_p: int, max_r: int) -> CheckResult:
    """Σ c^r_p u^p = (Σ c_i u^i) ∏_{j<=r} 1/(1+t_j u)  (r >= 1),  (Σ c_i u^i) ∏_{j<=|r|} (1-t_j u)  (r <= -1)."""
    tally = Tally(f"generating_series k={k}")
    for r in range(-max_r, max_r + 1):
        if r == 0:
            continue
        if r > 0:
            factors = [[(-t(j)) ** n for n in range(max_p + 1)] for j in range(1, r + 1)]
        else:
            factors = [[Polynomial.one(), -t(j)] for j in range(1, -r + 1)]
        weights = _truncated_product(factors, max_p)
        for p in range(0, max_p + 1):
            rhs = Polynomial.zero()
            for i in range(0, p + 1):
                rhs = rhs + c(i, k) * weights[p - i]
            tally.equal(c_r(p, r, k), rhs, f"p={p} r={r}")
    return tally.result()


def _s0_series_coefficient(i: int) -> Polynomial:
    """(1-t_1u)(1-t_2u) / ((1+t_1u)(1+t_2u)) 의 u^i 계수."""
    numerator = (Polynomial.one(), -(t(1) + t(2)), t(1) * t(2))
    total = Polynomial.zero()
    for a, coeff in enumerate(numerator):
        if a <= i:
            total = total + coeff * h_sym(i - a, 2, True)
    return total


def check_s0_series(k: int, max_p: int) -> CheckResult:
    """s_0(Σ c_p u^p) = (1-t_1u)(1-t_2u)/((1+t_1u)(1+t_2u)) Σ c_p u^p."""
    tally = Tally(f"s0_series k={k}")
    for p in range(0, max_p + 1):
        rhs = Polynomial.zero()
        for i in range(0, p + 1):
            rhs = rhs + c(p - i, k) * _s0_series_coefficient(i)
        tally.equal(_s(0, c(p, k), k), rhs, f"p={p}")
    tally.equal(_d(0, b(k), k), c_r(k - 1, 2, k), "d0(b_k)")
    tally.equal(_d(0, btilde(k), k), c_r(k - 1, 2, k), "d0(bt_k)")
    return tally.result()


# ============================================================
# c^r_p 의 분할 차분
# ============================================================

def check_divided_difference_on_c(k: int, max_p: int, max_r: int) -> CheckResult:
    tally = Tally(f"d_i_on_c k={k}")
    for p in range(0, max_p + 1):
        for r in range(-max_r, max_r + 1):
            for i in range(1, max_r + 2):
                expected = c_r(p - 1, r + 1, k) if r in (i, -i) else Polynomial.zero()
                tally.equal(_d(i, c_r(p, r, k), k), expected, f"i={i} p={p} r={r}")
            if r == 1:
                expected = c_r(p - 1, 2, k)
            elif r == 0:
                expected = c_r(p - 1, 2, k) * 2
            elif r == -1:
                expected = c_r(p - 1, 1, k) * 2 - c(p - 1, k)
            else:
                expected = Polynomial.zero()
            tally.equal(_d(0, c_r(p, r, k), k), expected, f"i=0 p={p} r={r}")
    for p in range(1, max_p + 1):
        minus = c_r(p, -1, k)
        tally.equal(_d(0, minus, k), a_s(p - 1, 1, k) * 2, f"d0 c^-1 p={p}")
        tally.equal(_d(1, minus, k), a_s(p - 1, 0, k) * 2, f"d1 c^-1 p={p}")
        tally.equal(divided_difference_01(minus, k), c_r(p - 1, 1, k) * 2, f"d01 c^-1 p={p}")
    return tally.result()


def check_product_rules(k: int, max_p: int, max_r: int) -> CheckResult:
    """∂_i(c^{-i}_p c^i_q) 와 ∂_0, ∂_1, ∂_0+∂_1 의 (c^{-1}_p c^1_q) 공식."""
    tally = Tally(f"d_products k={k}")
    for p in range(1, max_p + 1):
        for q in range(1, max_p + 1):
            for i in range(1, min(max_r, _PRODUCT_MAX_I) + 1):
                lhs = _d(i, c_r(p, -i, k) * c_r(q, i, k), k)
                rhs = c_r(p - 1, -i + 1, k) * c_r(q, i + 1, k) + c_r(p, -i + 1, k) * c_r(q - 1, i + 1, k)
                tally.equal(lhs, rhs, f"i={i} p={p} q={q}")
            product = c_r(p, -1, k) * c_r(q, 1, k)
            tally.equal(
                _d(0, product, k),
                (a_s(p - 1, 1, k) * c_r(q, 2, k) + a_s(p, 1, k) * c_r(q - 1, 2, k)) * 2,
                f"d0 p={p} q={q}",
            )
            tally.equal(
                _d(1, product, k),
                (a_s(p - 1, 0, k) * c_r(q, 2, k) + a_s(p, 0, k) * c_r(q - 1, 2, k)) * 2,
                f"d1 p={p} q={q}",
            )
            tally.equal(
                divided_difference_01(product, k),
                (c_r(p - 1, 1, k) * c_r(q, 2, k) + c_r(p, 1, k) * c_r(q - 1, 2, k)) * 2,
                f"d01 p={p} q={q}",
            )
    return tally.result()


# ============================================================
# ĉ^r_p (f_k = b_k 또는 b̃_k)
# ============================================================

def check_simple_action_on_c_hat(k: int, max_p: int, max_r: int) -> CheckResult:
    """r = -i 경우는 보정항이 양변에 같이 나타나는 p = k+i, i >= 2 에서만 확인합니다."""
    tally = Tally(f"s_i_on_c_hat k={k}")
    for v in HAT_VARIANTS:
        hat = lambda p, r: c_hat(p, r, k, v)  # noqa: E731
        for p in range(0, max_p + 1):
            for r in range(-max_r, max_r + 1):
                for i in range(1, max_r + 2):
                    label = f"{v.value} i={i} p={p} r={r}"
                    lhs = _s(i, hat(p, r), k)
                    if r == i:
                        tally.equal(lhs, hat(p, i + 1) + t(i) * hat(p - 1, i + 1), label)
                    elif r == -i:
                        if i >= 2 and p == k + i:
                            tally.equal(lhs, hat(p, -i + 1) - t(i + 1) * hat(p - 1, -i + 1), label)
                    else:
                        tally.equal(lhs, hat(p, r), label)
                if abs(r) >= 2:
                    tally.equal(_s(0, hat(p, r), k), hat(p, r), f"{v.value} i=0 p={p} r={r}")
    return tally.result()


def check_divided_difference_on_c_hat(k: int, max_p: int, max_r: int) -> CheckResult:
    tally = Tally(f"d_i_on_c_hat k={k}")
    for v in HAT_VARIANTS:
        hat = lambda p, r: c_hat(p, r, k, v)  # noqa: E731
        fk = f_k(k, v)
        for p in range(k + 1, max_p + 1):
            r = k - p
            for i in range(1, max_r + 2):
                if i == p - k and i >= 2:
                    expected = hat(p - 1, r + 1)
                elif i == p - k:
                    expected = fk * 2
                else:
                    expected = Polynomial.zero()
                tally.equal(_d(i, hat(p, r), k), expected, f"{v.value} i={i} p={p}")
            expected = ftilde_s(1, k, v) * 2 if p == k + 1 else Polynomial.zero()
            tally.equal(_d(0, hat(p, r), k), expected, f"{v.value} i=0 p={p}")
        top = hat(k + 1, -1)
        tally.equal(divided_difference_01(top, k), c_r(k, 1, k) * 2, f"{v.value} d01")
        for i in range(2, min(max_r, _PRODUCT_MAX_I) + 1):
            p = k + i
            for q in range(1, max_p + 1):
                lhs = _d(i, hat(p, -i) * c_r(q, i, k), k)
                rhs = hat(p - 1, -i + 1) * c_r(q, i + 1, k) + hat(p, -i + 1) * c_r(q - 1, i + 1, k)
                tally.equal(lhs, rhs, f"{v.value} product i={i} q={q}")
        for q in range(1, max_p + 1):
            product = top * c_r(q, 1, k)
            tally.equal(
                _d(0, product, k),
                (ftilde_s(1, k, v) * c_r(q, 2, k) + a_s(k + 1, 1, k) * c_r(q - 1, 2, k)) * 2,
                f"{v.value} d0 product q={q}",
            )
            tally.equal(
                _d(1, product, k),
                (fk * c_r(q, 2, k) + a_s(k + 1, 0, k) * c_r(q - 1, 2, k)) * 2,
                f"{v.value} d1 product q={q}",
            )
            tally.equal(
                divided_difference_01(product, k),
                (c_r(k, 1, k) * c_r(q, 2, k) + c_r(k + 1, 1, k) * c_r(q - 1, 2, k)) * 2,
                f"{v.value} d01 product q={q}",
            )
    return tally.result()


# ============================================================
# a, f 가 섞인 곱의 ∂_0, ∂_1
# ============================================================

def _mixed_cases(k: int, v: FVariant, p: int, q: int) -> List[Tuple[str, Callable[[], Polynomial], Callable[[], Polynomial]]]:
    a = lambda n, s: a_s(n, s, k)  # noqa: E731
    c2 = lambda n: c_r(n, 2, k)  # noqa: E731
    minus = c_r(p, -1, k)
    top = c_hat(k + 1, -1, k, v)
    fk, ft = f_k(k, v), ftilde(k, v)
    f1, ft1 = f_s(1, k, v), ftilde_s(1, k, v)
    return [
        (
            "d0(c^-1_p a^0_q)",
            lambda: _d(0, minus * a(q, 0), k),
            lambda: (a(p - 1, 1) * c2(q) + a(p, 1) * c2(q - 1)) * 2 - a(p - 1, 1) * a(q, 1) * 2,
        ),
        (
            "d0(c^-1_p ft^0_k)",
            lambda: _d(0, minus * ft, k),
            lambda: (a(p - 1, 1) * c2(k) + a(p, 1) * c2(k - 1)) * 2 - a(p - 1, 1) * f1 * 2,
        ),
        (
            "d0(ch^-1 a^0_q)",
            lambda: _d(0, top * a(q, 0), k),
            lambda: (ft1 * c2(q) + a(k + 1, 1) * c2(q - 1)) * 2 - ft1 * a(q, 1) * 2,
        ),
        (
            "d0(ch^-1 ft^0_k)",
            lambda: _d(0, top * ft, k),
            lambda: (ft1 * c2(k) + a(k + 1, 1) * c2(k - 1)) * 2 - ft1 * f1 * 2,
        ),
        (
            "d1(c^-1_p a^1_q)",
            lambda: _d(1, minus * a(q, 1), k),
            lambda: (a(p - 1, 0) * c2(q) + a(p, 0) * c2(q - 1)) * 2 - a(p - 1, 0) * a(q, 0) * 2,
        ),
        (
            "d1(c^-1_p f^1_k)",
            lambda: _d(1, minus * f1, k),
            lambda: (a(p - 1, 0) * c2(k) + a(p, 0) * c2(k - 1)) * 2 - a(p - 1, 0) * ft * 2,
        ),
        (
            "d1(ch^-1 a^1_q)",
            lambda: _d(1, top * a(q, 1), k),
            lambda: (fk * c2(q) + a(k + 1, 0) * c2(q - 1)) * 2 - fk * a(q, 0) * 2,
        ),
        (
            "d1(ch^-1 f^1_k)",
            lambda: _d(1, top * f1, k),
            lambda: (fk * c2(k) + a(k + 1, 0) * c2(k - 1)) * 2 - fk * ft * 2,
        ),
    ]


def check_mixed_products(k: int, max_p: int) -> CheckResult:
    tally = Tally(f"d01_mixed k={k}")
    for v in HAT_VARIANTS:
        for p in range(1, max_p + 1):
            for q in range(1, max_p + 1):
                for name, lhs, rhs in _mixed_cases(k, v, p, q):
                    tally.equal(lhs(), rhs(), f"{v.value} {name} p={p} q={q}")
    return tally.result()


def check_pair_relation(k: int) -> CheckResult:
    """f̃^1_k f^1_k + 2 Σ_{r=1}^k (-1)^r a^1_{k+r} a^1_{k-r} ≡ 0 (mod J^(k))."""
    tally = Tally(f"pair_relation k={k}")
    for v in HAT_VARIANTS:
        total = ftilde_s(1, k, v) * f_s(1, k, v)
        for r in range(1, k + 1):
            total = total + a_s(k + r, 1, k) * a_s(k - r, 1, k) * (2 * (-1) ** r)
        tally.check(eq_mod_ideal(total, Polynomial.zero(), k), v.value)
    return tally.result()


def identity_checks(k: int, max_p: int, max_r: int) -> List[CheckResult]:
    """k 하나에 대한 항등식 묶음 전체."""
    logger.info(f"[Verify] 항등식 검사: k={k}, p<={max_p}, |r|<={max_r}")
    return [
        check_c_recursion(k, max_p, max_r),
        check_simple_action_on_c(k, max_p, max_r),
        check_s0_series(k, max_p),
        check_generating_series(k, max_p, max_r),
        check_divided_difference_on_c(k, max_p, max_r),
        check_product_rules(k, max_p, max_r),
        check_simple_action_on_c_hat(k, max_p, max_r),
        check_divided_difference_on_c_hat(k, max_p, max_r),
        check_mixed_products(k, max_p),
        check_pair_relation(k),
    ]
