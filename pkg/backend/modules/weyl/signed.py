"""W̃_∞ 원소 (짝수 개의 부호 변경을 갖는 부호 순열).

한 줄 표기 창(window) (w_1, ..., w_n) 으로 표현하고, n 이후는 고정점입니다.
뒤쪽 고정점은 저장 시 제거하므로 (w_1..w_n) 과 (w_1..w_n, n+1) 은 같은 값입니다.

곱은 합성입니다: (u * w)(x) = u(w(x)). 따라서 s_i * w 는 w 의 *값*에 작용합니다.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..errors import ParseError, PermutationError


def _strip(window: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(window)
    while end > 0 and window[end - 1] == end:
        end -= 1
    return window[:end]


@dataclass(frozen=True)
class SignedPermutation:
    """부호 순열 w ∈ W̃_∞.

    Attributes:
        window: 뒤쪽 고정점을 제거한 한 줄 표기
    """

    window: Tuple[int, ...] = ()

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        n = len(window)
        if sorted(abs(x) for x in window) != list(range(1, n + 1)) or 0 in window:
            raise PermutationError(f"{window} is not a signed permutation of 1..{n}")
        if sum(1 for x in window if x < 0) % 2:
            raise PermutationError(f"{window} has an odd number of sign changes")
        object.__setattr__(self, "window", _strip(window))

    # ============================================================
    # 생성자
    # ============================================================

    @classmethod
    def identity(cls) -> "SignedPermutation":
        return cls(())

    @classmethod
    def simple(cls, i: int) -> "SignedPermutation":
        """단순 반사 s_i. s_0 = (-2, -1), s_i 는 i, i+1 교환."""
        if i < 0:
            raise ValueError(f"Simple reflection index must be >= 0, got {i}")
        if i == 0:
            return cls((-2, -1))
        window = list(range(1, i + 2))
        window[i - 1], window[i] = i + 1, i
        return cls(tuple(window))

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "SignedPermutation":
        result = cls.identity()
        for i in word:
            result = result * cls.simple(i)
        return result

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """"-4,6,8,-5" 형식을 파싱합니다."""
        stripped = text.strip()
        if stripped in ("", "-", "id"):
            return cls.identity()
        values = []
        offset = 0
        for piece in text.split(","):
            try:
                values.append(int(piece))
            except ValueError as e:
                raise ParseError("Expected a signed integer", text, offset) from e
            offset += len(piece) + 1
        try:
            return cls(tuple(values))
        except PermutationError as e:
            raise ParseError(str(e), text) from e

    # ============================================================
    # 값 / 연산
    # ============================================================

    @property
    def size(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 is not in the domain")
        n = abs(x)
        value = self.window[n - 1] if n <= len(self.window) else n
        return value if x > 0 else -value

    def extended(self, n: int) -> Tuple[int, ...]:
        """길이가 최소 n 인 창."""
        return self.window + tuple(range(len(self.window) + 1, n + 1))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = max(self.size, other.size)
        return SignedPermutation(tuple(self(other(x)) for x in range(1, n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.size
        for position, value in enumerate(self.window, start=1):
            inv[abs(value) - 1] = position if value > 0 else -position
        return SignedPermutation(tuple(inv))

    def length(self) -> int:
        """#{i<j : w_i > w_j} + Σ_{w_i<0} (|w_i| - 1)."""
        w = self.window
        inversions = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        return inversions + sum(-x - 1 for x in w if x < 0)

    def is_unsigned(self) -> bool:
        return all(x > 0 for x in self.window)

    def position_of(self, value: int) -> int:
        """w_p = value 인 p. 없으면 0."""
        n = abs(value)
        if n > self.size:
            return n if value > 0 else 0
        for p, x in enumerate(self.window, start=1):
            if x == value:
                return p
        return 0

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.window) if self.window else "id"


def reduced_word(w: SignedPermutation) -> List[int]:
    """왼쪽 하강으로 만든 축약 단어 [a_1, ..., a_r], w = s_{a_1} ... s_{a_r}.

    각 단계에서 ℓ(s_i w) < ℓ(w) 인 가장 작은 i 를 고릅니다.
    """
    word: List[int] = []
    current = w
    length = current.length()
    while length > 0:
        for i in range(0, max(current.size, 2)):
            candidate = SignedPermutation.simple(i) * current
            candidate_length = candidate.length()
            if candidate_length < length:
                word.append(i)
                current, length = candidate, candidate_length
                break
        else:
            raise RuntimeError(f"No left descent found for {current}")
    return word


def left_weak_leq(u: SignedPermutation, w: SignedPermutation) -> bool:
    """ℓ(w u^{-1}) + ℓ(u) = ℓ(w) 이면 u ≤ w (왼쪽 약순서)."""
    return (w * u.inverse()).length() + u.length() == w.length()
