"""Young 상승 연산자 R^λ 전개.

R^λ = ∏_{i<j} (1 - R_ij) ∏_{(i,j)∈C} (1 + R_ij)^{-1}

쌍별 계수:
    (i,j) ∈ C : 1 (n=0), 2(-1)^n (n>=1)
    (i,j) ∉ C : 1 (n=0), -1 (n=1), 0 (n>=2)

ν = Rλ 에 음수 성분이 생기는 항은 ⋆ 치환에서 0 이 되므로 열거 단계에서 버립니다.
열 j = ℓ, ..., 2 순으로 행 j 로 들어오는 지수 합을 λ_j + (행 j 에서 나간 지수 합) 으로 제한합니다.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Tuple, Union

from ..weyl import KStrictPartition, TypedPartition, c_set, c_set_untyped

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class RaisingMonomial:
    """R = ∏ R_ij^{n_ij} 와 그 계수, ν = Rλ.

    Attributes:
        exponents: n_ij > 0 인 ((i, j), n_ij) 들, (i, j) 순 정렬
        coeff: R^λ 전개에서의 정수 계수
        nu: Rλ
    """

    exponents: Tuple[Tuple[Pair, int], ...]
    coeff: int
    nu: Tuple[int, ...]

    def support(self, m: int) -> FrozenSet[int]:
        """supp_m(R): n_ij > 0 이고 j < m 인 모든 i, j."""
        rows = set()
        for (i, j), n in self.exponents:
            if n > 0 and j < m:
                rows.update((i, j))
        return frozenset(rows)

    def touches(self, row: int) -> bool:
        return any(n > 0 and row in pair for pair, n in self.exponents)

    @property
    def is_identity(self) -> bool:
        return not self.exponents


def _pair_coefficient(n: int, in_c: bool) -> int:
    if n == 0:
        return 1
    if in_c:
        return 2 * (-1) ** n
    return -1 if n == 1 else 0


def _bounded_vectors(caps: Tuple[int, ...], budget: int) -> Iterator[Tuple[int, ...]]:
    """0 <= v_i <= caps[i], Σ v_i <= budget 인 모든 벡터."""
    if not caps:
        yield ()
        return
    for first in range(min(caps[0], budget) + 1):
        for rest in _bounded_vectors(caps[1:], budget - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _expand(parts: Tuple[int, ...], pairs: FrozenSet[Pair]) -> Tuple[RaisingMonomial, ...]:
    ell = len(parts)
    terms: List[RaisingMonomial] = []

    def walk(j: int, outflow: Tuple[int, ...], chosen: Tuple[Tuple[Pair, int], ...], coeff: int):
        if j < 2:
            inflow = [0] * ell
            for (_, col), n in chosen:
                inflow[col - 1] += n
            nu = tuple(parts[r] + outflow[r] - inflow[r] for r in range(ell))
            exponents = tuple(sorted(chosen))
            terms.append(RaisingMonomial(exponents=exponents, coeff=coeff, nu=nu))
            return
        budget = parts[j - 1] + outflow[j - 1]
        caps = tuple(budget if (i, j) in pairs else 1 for i in range(1, j))
        for vector in _bounded_vectors(caps, budget):
            factor = coeff
            picked = list(chosen)
            new_outflow = list(outflow)
            for i, n in enumerate(vector, start=1):
                factor *= _pair_coefficient(n, (i, j) in pairs)
                if n:
                    picked.append(((i, j), n))
                    new_outflow[i - 1] += n
            if factor:
                walk(j - 1, tuple(new_outflow), tuple(picked), factor)

    walk(ell, (0,) * ell, (), 1)
    logger.debug(f"[Eta] R^λ 전개: λ={parts}, |C|={len(pairs)}, {len(terms)} 항")
    return tuple(terms)


def raising_pairs(lam: Union[TypedPartition, KStrictPartition]) -> FrozenSet[Pair]:
    """ℓ(λ) 행으로 제한한 C(λ)."""
    ell = lam.length
    if isinstance(lam, TypedPartition):
        full = c_set(lam)
    else:
        full = c_set_untyped(lam, ell)
    return frozenset((i, j) for i, j in full if j <= ell)


def expand_raising(lam: Union[TypedPartition, KStrictPartition]) -> List[RaisingMonomial]:
    """R^λ 를 전개해 ν = Rλ >= 0 인 단항식만 돌려줍니다.

    Args:
        lam: 타입 분할 (C 는 w_λ 에서) 또는 타입 없는 분할 (C 는 부분 조건에서)

    Returns:
        List[RaisingMonomial]: 0 이 아닌 계수의 항들

    Examples:
        >>> [(m.nu, m.coeff) for m in expand_raising(TypedPartition((2, 1), 1, 1))]
        [((2, 1), 1), ((3, 0), -2)]
    """
    return list(_expand(tuple(lam.parts), raising_pairs(lam)))
