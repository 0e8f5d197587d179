"""덮개 관계 분류와 직사각형 최상위 원소.

w_λ = s_i · w_μ, ℓ(w_λ) = ℓ(w_μ) + 1 인 (i, μ) 를 찾아 a–g 경우로 나눕니다.

    (a)  (… i+1 … i …)
    (b)  (… i … -(i+1) …)
    (c)  (-i … -(i+1) …)
    (d1) (… -(i+1) … i …),  w_1 ≠ -(i+1)
    (d2) w_1 = -(i+1),  w^{-1}(i) > k
    (e)  (±1 … -2 …)
    (f)  (±2 … ±1 …)
    (g)  (… -2 -1 …),  |w_1| > 2
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import CoverClassificationError, PartitionError
from .grassmannian import is_k_grassmannian, partition_to_perm, perm_to_partition
from .partitions import TypedPartition
from .signed import SignedPermutation, reduced_word

CASES = ("a", "b", "c", "d1", "d2", "e", "f", "g")


@dataclass(frozen=True)
class CoverDatum:
    """λ 의 덮개 하나.

    Attributes:
        mu: 한 칸을 뺀 분할
        i: 단순 반사 첨자
        case: a, b, c, d1, d2, e, f, g 중 하나
        p: 칸이 빠진 행
        q: d1 경우의 w_{k+q} = i 인 행
    """

    mu: TypedPartition
    i: int
    case: str
    p: int
    q: Optional[int] = None


def _classify(w: SignedPermutation, i: int, k: int) -> str:
    pos = w.position_of
    first = w(1)
    if i == 0:
        if abs(first) == 1 and pos(-2):
            return "e"
        if abs(first) == 2 and (pos(1) or pos(-1)):
            return "f"
        p = pos(-2)
        if p > k and w(p + 1) == -1 and abs(first) > 2:
            return "g"
    else:
        up, down = i + 1, i
        if pos(up) and pos(down) and pos(up) < pos(down):
            return "a"
        if pos(down) and pos(-up) and pos(down) < pos(-up):
            return "b"
        if first == -down and pos(-up):
            return "c"
        if pos(-up) and pos(down) and pos(-up) < pos(down):
            if first != -up:
                return "d1"
            if pos(down) > k:
                return "d2"
    raise CoverClassificationError(f"Unclassified cover: s_{i} on {w}")


def covers(lam: TypedPartition) -> List[CoverDatum]:
    """w_λ = s_i w_μ (축약) 인 모든 (i, μ).

    i 는 0 부터 w_λ 창 길이 미만까지 검사하면 충분합니다.
    """
    k = lam.k
    w = partition_to_perm(lam)
    length = w.length()
    result = []
    for i in range(0, max(w.size, 2)):
        v = SignedPermutation.simple(i) * w
        if v.length() != length - 1 or not is_k_grassmannian(v, k):
            continue
        mu = perm_to_partition(v, k)
        p = next(j for j in range(1, lam.length + 1) if mu.part(j) != lam.part(j))
        case = _classify(w, i, k)
        q = w.position_of(i) - k if case == "d1" else None
        result.append(CoverDatum(mu=mu, i=i, case=case, p=p, q=q))
    return result


def top_partition(k: int, n: int) -> TypedPartition:
    """λ_0 = (n+k-1, n+k-2, ..., 2k)."""
    if n < k:
        raise PartitionError(f"n must be >= k (n={n}, k={k})")
    return TypedPartition(tuple(range(n + k - 1, 2 * k - 1, -1)), k, 0)


def fits_rectangle(lam: TypedPartition, n: int) -> bool:
    return lam.length <= n - lam.k and (not lam.parts or lam.parts[0] <= n + lam.k - 1)


def reduced_word_to_top(lam: TypedPartition, k: int, n: int) -> Tuple[int, ...]:
    """w_λ w_{λ_0} = s_{a_1} ⋯ s_{a_r} 인 축약 단어 (a_1, ..., a_r).

    Raises:
        PartitionError: λ 가 (n-k) x (n+k-1) 직사각형 밖
    """
    if lam.k != k:
        raise PartitionError(f"Partition k={lam.k} does not match k={k}")
    if not fits_rectangle(lam, n):
        raise PartitionError(f"{lam} does not fit the {n - k}x{n + k - 1} rectangle")
    top = partition_to_perm(top_partition(k, n))
    x = top * partition_to_perm(lam).inverse()
    word = reduced_word(x)
    if len(word) != top.length() - lam.size:
        raise RuntimeError(f"Non-additive length between {lam} and the top class")
    return tuple(reversed(word))
