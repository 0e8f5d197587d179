"""⋆ 치환: R ⋆ ĉ^β_λ.

m = ℓ_k(λ) + 1.
    - i < m (타입 0 이면 모든 행): i ∈ supp_m(R) 이면 c^{β_i}_{ν_i}, 아니면 ĉ^{β_i}_{ν_i}
    - 타입 > 0 의 행 m: R 이 행 m 을 건드리면 a^{β_m}_{ν_m}, 아니면 b^{β_m}_k / b̃^{β_m}_k
    - 타입 > 0 의 행 m 이후: c^{β_i}_{ν_i}
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import PartitionError
from ..polyring import FVariant, Polynomial, a_s, b_s, btilde_s, c_hat, c_r, row_variant
from .raising import RaisingMonomial


@dataclass(frozen=True)
class StarContext:
    """⋆ 치환의 고정 자료.

    Attributes:
        k: 양의 정수
        beta: 행별 r 첨자 β_1..β_ℓ
        type: 0, 1, 2 (Ĥ 는 0)
        m: ℓ_k(λ) + 1
        hat_variant: None 이면 행 홀짝 규칙, 지정하면 모든 행에 같은 보정
    """

    k: int
    beta: Tuple[int, ...]
    type: int
    m: int
    hat_variant: Optional[FVariant] = None

    def __post_init__(self):
        for i, value in enumerate(self.beta, start=1):
            if value < 0 and i >= self.m:
                raise ValueError(f"β_{i}={value} is negative at or beyond row m={self.m}")

    def variant(self, row: int) -> FVariant:
        return self.hat_variant if self.hat_variant is not None else row_variant(row)


def _typed_row(R: RaisingMonomial, ctx: StarContext) -> Polynomial:
    m, k = ctx.m, ctx.k
    beta_m = ctx.beta[m - 1]
    if R.touches(m):
        return a_s(R.nu[m - 1], beta_m, k)
    if ctx.type == 1:
        return b_s(beta_m, k)
    return btilde_s(beta_m, k)


def star_apply(R: RaisingMonomial, ctx: StarContext) -> Polynomial:
    """R ⋆ ĉ^β_λ (계수 R.coeff 포함).

    Raises:
        PartitionError: ν 에 음수 성분이 있음
    """
    if any(p < 0 for p in R.nu):
        raise PartitionError(f"Raised sequence {R.nu} has a negative entry")
    if len(R.nu) != len(ctx.beta):
        raise ValueError(f"Row count mismatch: ν has {len(R.nu)}, β has {len(ctx.beta)}")
    support = R.support(ctx.m)
    product = Polynomial.constant(R.coeff)
    for i, (p, r) in enumerate(zip(R.nu, ctx.beta), start=1):
        if ctx.type > 0 and i == ctx.m:
            factor = _typed_row(R, ctx)
        elif ctx.type > 0 and i > ctx.m:
            factor = c_r(p, r, ctx.k)
        elif i in support:
            factor = c_r(p, r, ctx.k)
        else:
            factor = c_hat(p, r, ctx.k, ctx.variant(i))
        product = product * factor
        if product.is_zero:
            break
    return product
