"""W̃_3 의 Grassmannian 원소에 대한 기준 H_λ(c|t), Ĥ_λ(c|t) 값.

표기: e^r_j, h^r_j 는 모두 (-t) 에서 평가한 값입니다.
"""

from fractions import Fraction
from typing import Callable, List, Tuple

from ..polyring import Polynomial, b, btilde, c, e_sym, h_sym
from ..weyl import KStrictPartition, TypedPartition

Builder = Callable[[], Polynomial]


def _e(j: int, r: int) -> Polynomial:
    return e_sym(j, r, True)


def _h(j: int, r: int) -> Polynomial:
    return h_sym(j, r, True)


def _typed(parts: Tuple[int, ...], k: int, type_: int = 0) -> TypedPartition:
    return TypedPartition(parts, k, type_)


# ============================================================
# H_λ(c|t)
# ============================================================

def _double_eta_k1() -> List[Tuple[TypedPartition, Builder]]:
    c1 = c(1, 1)
    bt1 = btilde(1)
    row2 = lambda: b(2) + bt1 * _e(1, 1)  # noqa: E731
    row3 = lambda: b(3) + b(2) * _e(1, 2) + bt1 * _e(2, 2)  # noqa: E731
    next3 = lambda: b(4) + b(3) * _e(1, 2) + b(2) * _e(2, 2)  # noqa: E731
    return [
        (_typed((), 1), Polynomial.one),
        (_typed((1,), 1, 1), lambda: b(1) + _h(1, 1)),
        (_typed((1,), 1, 2), lambda: bt1),
        (_typed((2,), 1), row2),
        (
            _typed((1, 1), 1, 1),
            lambda: (b(1) + _h(1, 1)) * (c1 + _h(1, 2)) - (b(2) + c1 * _h(1, 1) + _h(2, 1)),
        ),
        (_typed((1, 1), 1, 2), lambda: bt1 * (c1 + _h(1, 2)) - b(2)),
        (_typed((3,), 1), row3),
        (_typed((2, 1), 1, 1), lambda: row2() * b(1) - (b(3) + b(2) * _e(1, 1))),
        (_typed((2, 1), 1, 2), lambda: row2() * (bt1 + _h(1, 1)) - (b(3) + b(2) * _e(1, 1))),
        (_typed((3, 1), 1, 1), lambda: row3() * b(1) - next3()),
        (_typed((3, 1), 1, 2), lambda: row3() * (bt1 + _h(1, 1)) - next3()),
        (
            _typed((3, 2), 1),
            lambda: row3() * (b(2) + b(1) * _e(1, 1))
            - next3() * (c1 + _e(1, 1))
            + (b(5) + b(4) * _e(1, 2) + b(3) * _e(2, 2)),
        ),
    ]


def _double_eta_k2() -> List[Tuple[TypedPartition, Builder]]:
    bt2 = btilde(2)
    return [
        (_typed((1,), 2), lambda: b(1) + _h(1, 2)),
        (_typed((2,), 2, 1), lambda: b(2) + b(1) * _h(1, 1) + _h(2, 1)),
        (_typed((2,), 2, 2), lambda: bt2),
        (_typed((3,), 2), lambda: b(3) + bt2 * _e(1, 1)),
        (_typed((4,), 2), lambda: b(4) + b(3) * _e(1, 2) + bt2 * _e(2, 2)),
    ]


def double_eta_table() -> List[Tuple[TypedPartition, Builder]]:
    """17 개의 기준 H_λ(c|t)."""
    return _double_eta_k1() + _double_eta_k2()


# ============================================================
# Ĥ_λ(c|t)
# ============================================================

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def _hat_k1() -> List[Tuple[KStrictPartition, Builder]]:
    cc = lambda p: c(p, 1)  # noqa: E731
    bt1 = btilde(1)
    top2 = lambda: cc(2) + bt1 * _e(1, 1) * 2  # noqa: E731
    top3 = lambda: cc(3) + cc(2) * _e(1, 2) + bt1 * _e(2, 2) * 2  # noqa: E731
    next3 = lambda: cc(4) + cc(3) * _e(1, 2) + cc(2) * _e(2, 2)  # noqa: E731
    shape = lambda *parts: KStrictPartition(parts, 1)  # noqa: E731
    return [
        (shape(), Polynomial.one),
        (shape(1), lambda: cc(1) + _h(1, 1)),
        (shape(2), lambda: top2() * _HALF),
        (
            shape(1, 1),
            lambda: (cc(1) + _h(1, 1)) * (cc(1) + _h(1, 2)) - (cc(2) + cc(1) * _h(1, 1) + _h(2, 1)),
        ),
        (shape(3), lambda: top3() * _HALF),
        (shape(2, 1), lambda: (top2() * (cc(1) + _h(1, 1)) - (cc(3) + cc(2) * _e(1, 1)) * 2) * _HALF),
        (shape(3, 1), lambda: (top3() * (cc(1) + _h(1, 1)) - next3() * 2) * _HALF),
        (
            shape(3, 2),
            lambda: (
                top3() * (cc(2) + b(1) * _e(1, 1) * 2)
                - next3() * (cc(1) + _e(1, 1)) * 2
                + (cc(5) + cc(4) * _e(1, 2) + cc(3) * _e(2, 2)) * 2
            )
            * _QUARTER,
        ),
    ]


def _hat_k2() -> List[Tuple[KStrictPartition, Builder]]:
    cc = lambda p: c(p, 2)  # noqa: E731
    bt2 = btilde(2)
    shape = lambda *parts: KStrictPartition(parts, 2)  # noqa: E731
    return [
        (shape(1), lambda: cc(1) + _h(1, 2)),
        (shape(2), lambda: cc(2) + cc(1) * _h(1, 1) + _h(2, 1)),
        (shape(3), lambda: (cc(3) + bt2 * _e(1, 1) * 2) * _HALF),
        (shape(4), lambda: (cc(4) + cc(3) * _e(1, 2) + bt2 * _e(2, 2) * 2) * _HALF),
    ]


def hat_table() -> List[Tuple[KStrictPartition, Builder]]:
    """12 개의 기준 Ĥ_λ(c|t)."""
    return _hat_k1() + _hat_k2()
