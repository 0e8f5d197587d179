"""k-strict 분할과 타입이 붙은 k-strict 분할.

k-strict: k 보다 큰 부분은 반복되지 않음.
타입 규칙: type > 0  ⇔  어떤 부분이 k 와 같음.

텍스트 표기: "7,4,3,3,1:t2", 빈 분할은 "-" 또는 "0:t0".
"""

import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..errors import ParseError, PartitionError

TYPE_RULE = "type must be positive if and only if some part equals k"

_TYPE_SUFFIX_RE = re.compile(r":t([0-9]+)$")


def _normalize(parts) -> Tuple[int, ...]:
    values = tuple(int(p) for p in parts)
    if any(p < 0 for p in values):
        raise PartitionError(f"Negative part in {values}")
    stripped = tuple(p for p in values if p > 0)
    if any(stripped[i] < stripped[i + 1] for i in range(len(stripped) - 1)):
        raise PartitionError(f"Parts must be weakly decreasing: {values}")
    if values[: len(stripped)] != stripped:
        raise PartitionError(f"Zero parts must trail: {values}")
    return stripped


@dataclass(frozen=True)
class KStrictPartition:
    """타입 없는 k-strict 분할 (Ĥ_λ 의 첨자)."""

    parts: Tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PartitionError(f"k must be positive, got {self.k}")
        parts = _normalize(self.parts)
        for i in range(len(parts) - 1):
            if parts[i] == parts[i + 1] and parts[i] > self.k:
                raise PartitionError(f"Part {parts[i]} > k={self.k} is repeated in {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def ell_k(self) -> int:
        """k 보다 큰 부분의 개수 ℓ_k(λ)."""
        return sum(1 for p in self.parts if p > self.k)

    @property
    def has_part_k(self) -> bool:
        return self.k in self.parts

    def part(self, j: int) -> int:
        """1-기반 λ_j, 범위 밖은 0."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def typed(self, type_: int) -> "TypedPartition":
        return TypedPartition(self.parts, self.k, type_)

    def lifts(self) -> List["TypedPartition"]:
        if self.has_part_k:
            return [self.typed(1), self.typed(2)]
        return [self.typed(0)]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"


@dataclass(frozen=True)
class TypedPartition:
    """타입이 붙은 k-strict 분할 λ.

    Attributes:
        parts: 양의 정수의 약감소 수열
        k: 양의 정수
        type: 0, 1, 2
    """

    parts: Tuple[int, ...]
    k: int
    type: int = 0

    def __post_init__(self):
        shape = KStrictPartition(self.parts, self.k)
        object.__setattr__(self, "parts", shape.parts)
        if self.type not in (0, 1, 2):
            raise PartitionError(f"type must be 0, 1 or 2, got {self.type}")
        if (self.type > 0) != shape.has_part_k:
            raise PartitionError(f"{TYPE_RULE} (parts={shape.parts}, k={self.k}, type={self.type})")

    @property
    def shape(self) -> KStrictPartition:
        return KStrictPartition(self.parts, self.k)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def ell_k(self) -> int:
        return sum(1 for p in self.parts if p > self.k)

    def part(self, j: int) -> int:
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def dual(self) -> "TypedPartition":
        """반대 타입 λ′. 타입 0 이면 자기 자신."""
        if self.type == 0:
            return self
        return TypedPartition(self.parts, self.k, 3 - self.type)

    def sort_key(self) -> Tuple:
        return self.size, tuple(-p for p in self.parts), self.type

    def __str__(self) -> str:
        if not self.parts:
            return "-"
        return ",".join(str(p) for p in self.parts) + f":t{self.type}"


# ============================================================
# 파싱
# ============================================================

def _parse_parts(text: str, body: str) -> Tuple[int, ...]:
    if body in ("", "-", "0"):
        return ()
    parts = []
    offset = 0
    for piece in body.split(","):
        stripped = piece.strip()
        if not stripped.isdigit():
            raise ParseError("Expected a nonnegative integer part", text, offset)
        parts.append(int(stripped))
        offset += len(piece) + 1
    return tuple(parts)


def parse_typed(text: str, k: int) -> TypedPartition:
    """"7,4,3,3,1:t2" 를 TypedPartition 으로.

    타입 접미사가 없으면 부분 k 가 없을 때 0, 있을 때는 오류입니다.

    Raises:
        ParseError: 문법 오류
        PartitionError: k-strict 또는 타입 규칙 위반
    """
    raw = text.strip()
    match = _TYPE_SUFFIX_RE.search(raw)
    if match:
        body, type_ = raw[: match.start()], int(match.group(1))
    else:
        if ":" in raw:
            raise ParseError("Type suffix must be ':t0', ':t1' or ':t2'", text, raw.index(":"))
        body, type_ = raw, None
    parts = _parse_parts(text, body)
    if type_ is None:
        type_ = 0
    return TypedPartition(parts, k, type_)


def parse_shape(text: str, k: int) -> KStrictPartition:
    raw = text.strip()
    match = _TYPE_SUFFIX_RE.search(raw)
    if match:
        raw = raw[: match.start()]
    return KStrictPartition(_parse_parts(text, raw), k)


# ============================================================
# 열거
# ============================================================

def _shapes(k: int, rows: int, cols: int) -> Iterator[Tuple[int, ...]]:
    """rows x cols 직사각형 안의 k-strict 분할."""

    def extend(prefix: Tuple[int, ...], bound: int) -> Iterator[Tuple[int, ...]]:
        yield prefix
        if len(prefix) == rows:
            return
        for part in range(min(bound, cols), 0, -1):
            if prefix and part == prefix[-1] and part > k:
                continue
            yield from extend(prefix + (part,), part)

    yield from extend((), cols)


def enumerate_typed(k: int, rows: int, cols: int) -> List[TypedPartition]:
    """직사각형 안의 모든 타입 k-strict 분할.

    순서: 크기, 사전식 내림차순(지배 순서와 호환), 타입.
    """
    if k < 1:
        raise PartitionError(f"k must be positive, got {k}")
    result = []
    for parts in _shapes(k, max(rows, 0), max(cols, 0)):
        result.extend(KStrictPartition(parts, k).lifts())
    return sorted(result, key=TypedPartition.sort_key)


def typed_partitions_of(k: int, d: int) -> List[TypedPartition]:
    """크기가 정확히 d 인 타입 k-strict 분할."""
    return [lam for lam in enumerate_typed(k, d, d) if lam.size == d]


def dominates(mu: Tuple[int, ...], lam: Tuple[int, ...]) -> bool:
    """μ ⪰ λ (부분합 비교). 크기가 다르면 False."""
    if sum(mu) != sum(lam):
        return False
    total_mu = total_lam = 0
    for j in range(max(len(mu), len(lam))):
        total_mu += mu[j] if j < len(mu) else 0
        total_lam += lam[j] if j < len(lam) else 0
        if total_mu < total_lam:
            return False
    return True
