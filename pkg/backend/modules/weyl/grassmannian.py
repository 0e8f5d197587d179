"""k-Grassmannian 원소와 타입 k-strict 분할 사이의 전단사.

w 가 k-Grassmannian 이면 (|w_1| < w_2 < ... < w_k,  w_{k+1} < w_{k+2} < ...)

    λ_j = k - 1 + |w_{k+j}|                 (w_{k+j} < 0)
    λ_j = #{p <= k : |w_p| > w_{k+j}}       (w_{k+j} > 0)

타입은 w_1 > 1 이면 1, w_1 < -1 이면 2, 그 외 0.
"""

from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from ..errors import PermutationError
from .partitions import KStrictPartition, TypedPartition
from .signed import SignedPermutation

Pair = Tuple[int, int]


def is_k_grassmannian(w: SignedPermutation, k: int) -> bool:
    window = w.extended(k + 1)
    head = [abs(window[0])] + list(window[1:k])
    tail = window[k:]
    return all(head[i] < head[i + 1] for i in range(len(head) - 1)) and all(
        tail[i] < tail[i + 1] for i in range(len(tail) - 1)
    )


def perm_to_partition(w: SignedPermutation, k: int) -> TypedPartition:
    """w ↦ (λ, type).

    Raises:
        PermutationError: w 가 k-Grassmannian 이 아님
    """
    if not is_k_grassmannian(w, k):
        raise PermutationError(f"{w} is not {k}-Grassmannian")
    window = w.extended(k + 1)
    head = [abs(x) for x in window[:k]]
    parts = []
    for value in window[k:]:
        if value < 0:
            parts.append(k - 1 - value)
        else:
            parts.append(sum(1 for x in head if x > value))
    first = window[0]
    type_ = 1 if first > 1 else 2 if first < -1 else 0
    return TypedPartition(tuple(p for p in parts if p > 0), k, type_)


@lru_cache(maxsize=None)
def partition_to_perm(lam: TypedPartition) -> SignedPermutation:
    """λ ↦ w_λ (유일한 k-Grassmannian 원소).

    음수 꼬리값은 k 보다 큰 부분에서, (타입에 따라) -1 은 부호 짝수 조건에서 정해지고,
    나머지 값은 k 이하 부분들이 "자기보다 큰 앞쪽 값의 개수"가 되도록 배치합니다.
    """
    k = lam.k
    big = [p for p in lam.parts if p > k]
    negatives = [p - k + 1 for p in big]
    if lam.type == 0:
        minus_one = False
        first_negative = len(negatives) % 2 == 1
    else:
        first_negative = lam.type == 2
        minus_one = (len(negatives) + int(first_negative)) % 2 == 1
    if minus_one:
        negatives.append(1)
    # 양수 꼬리값들이 만들어야 할 부분들
    small = list(lam.parts[len(negatives):])

    used = set(negatives)
    head: List[int] = []
    positive_tail: List[int] = []
    value = 0

    def next_free() -> int:
        nonlocal value
        value += 1
        while value in used:
            value += 1
        return value

    for part in small:
        while len(head) < k - part:
            head.append(next_free())
        positive_tail.append(next_free())
    while len(head) < k:
        head.append(next_free())

    n = max([value] + negatives)
    rest = [x for x in range(1, n + 1) if x not in used and x not in head and x not in positive_tail]
    positive_tail.extend(rest)
    window = list(head) + [-a for a in negatives] + sorted(positive_tail)
    if first_negative:
        window[0] = -window[0]
    w = SignedPermutation(tuple(window))
    if perm_to_partition(w, k) != lam:
        raise RuntimeError(f"Bijection failed for {lam}: got {w}")
    return w


def c_set(lam: TypedPartition) -> FrozenSet[Pair]:
    """C(λ) = {(i,j) : i<j, w_{k+i} + w_{k+j} < 0}."""
    k = lam.k
    window = partition_to_perm(lam).extended(k + 1)
    tail = window[k:]
    return frozenset(
        (i + 1, j + 1)
        for i in range(len(tail))
        for j in range(i + 1, len(tail))
        if tail[i] + tail[j] < 0
    )


def c_set_untyped(shape: KStrictPartition, rows: Optional[int] = None) -> FrozenSet[Pair]:
    """λ_i + λ_j >= 2k + j - i 인 (i,j). rows 는 검사할 행 수 (기본: 길이 + 1)."""
    k = shape.k
    limit = rows if rows is not None else shape.length + 1
    return frozenset(
        (i, j)
        for j in range(2, limit + 1)
        for i in range(1, j)
        if shape.part(i) + shape.part(j) >= 2 * k + j - i
    )


def beta(lam: TypedPartition, rows: Optional[int] = None) -> Tuple[int, ...]:
    """β(λ)_j = w_{k+j} + 1 (음수), w_{k+j} (양수). 길이 rows (기본 ℓ(λ))."""
    k = lam.k
    count = lam.length if rows is None else rows
    w = partition_to_perm(lam)
    result = []
    for j in range(1, count + 1):
        value = w(k + j)
        result.append(value + 1 if value < 0 else value)
    return tuple(result)


def bar_lift(shape: KStrictPartition) -> TypedPartition:
    """β_j(λ̄) ≠ 0 인 타입 λ̄ (꼬리에 -1 이 없는 쪽)."""
    for lam in shape.lifts():
        if -1 not in partition_to_perm(lam).extended(shape.k + 1)[shape.k:]:
            return lam
    raise RuntimeError(f"No zero-avoiding lift for {shape}")


def beta_bar(shape: KStrictPartition, rows: Optional[int] = None) -> Tuple[int, ...]:
    """β̄(λ)_j = k - λ_j + #{i<j : (i,j) ∉ C(λ)} + [λ_j <= k]."""
    k = shape.k
    count = shape.length if rows is None else rows
    pairs = c_set_untyped(shape, max(count, shape.length))
    result = []
    for j in range(1, count + 1):
        outside = sum(1 for i in range(1, j) if (i, j) not in pairs)
        result.append(k - shape.part(j) + outside + (1 if shape.part(j) <= k else 0))
    return tuple(result)
