"""S_∞ ⊂ W̃_∞ 의 부호 없는 순열."""

from typing import Iterable

from ..errors import PermutationError
from ..weyl import SignedPermutation


class Permutation(SignedPermutation):
    """음수 성분이 없는 순열 u ∈ S_∞. 길이는 반전 수입니다."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_unsigned():
            raise PermutationError(f"{self.window} has negative entries")

    @classmethod
    def from_signed(cls, w: SignedPermutation) -> "Permutation":
        return cls(w.window)

    @classmethod
    def simple(cls, i: int) -> "Permutation":
        if i < 1:
            raise ValueError(f"S_∞ has no simple reflection s_{i}")
        return cls.from_signed(SignedPermutation.simple(i))

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "Permutation":
        result = cls(())
        for i in word:
            result = result * cls.simple(i)
        return result

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        product = SignedPermutation.__mul__(self, other)
        return Permutation(product.window) if product.is_unsigned() else product

    def inverse(self) -> "Permutation":
        return Permutation(SignedPermutation.inverse(self).window)

    def swap(self, i: int) -> "Permutation":
        """u s_i: 위치 i, i+1 의 값을 교환."""
        window = list(self.extended(i + 1))
        window[i - 1], window[i] = window[i], window[i - 1]
        return Permutation(tuple(window))
