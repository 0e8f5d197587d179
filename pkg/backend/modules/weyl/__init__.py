"""D형 Weyl 군 W̃_∞ 조합론 모듈.

Modules:
    signed: 부호 순열, 길이, 축약 단어
    partitions: (타입) k-strict 분할, 파싱, 열거
    grassmannian: k-Grassmannian 전단사, C(λ), β, β̄
    covers: 덮개 분류 (a–g), 최상위 분할, 직사각형 축약 단어
"""

from .signed import SignedPermutation, reduced_word, left_weak_leq
from .partitions import (
    KStrictPartition,
    TypedPartition,
    TYPE_RULE,
    parse_typed,
    parse_shape,
    enumerate_typed,
    typed_partitions_of,
    dominates,
)
from .grassmannian import (
    is_k_grassmannian,
    perm_to_partition,
    partition_to_perm,
    c_set,
    c_set_untyped,
    beta,
    beta_bar,
    bar_lift,
)
from .covers import CoverDatum, CASES, covers, top_partition, fits_rectangle, reduced_word_to_top

__all__ = [
    # Signed permutations
    "SignedPermutation",
    "reduced_word",
    "left_weak_leq",
    # Partitions
    "KStrictPartition",
    "TypedPartition",
    "TYPE_RULE",
    "parse_typed",
    "parse_shape",
    "enumerate_typed",
    "typed_partitions_of",
    "dominates",
    # Bijection
    "is_k_grassmannian",
    "perm_to_partition",
    "partition_to_perm",
    "c_set",
    "c_set_untyped",
    "beta",
    "beta_bar",
    "bar_lift",
    # Covers
    "CoverDatum",
    "CASES",
    "covers",
    "top_partition",
    "fits_rectangle",
    "reduced_word_to_top",
]
