"""W̃_∞ 조합론 테스트.

사용법:
    uv run pytest backend/test/test_weyl.py
"""

import itertools
import sys
from pathlib import Path

# Add backend to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from hypothesis import given, settings, strategies as st

from modules.errors import ParseError, PartitionError, PermutationError
from modules.weyl import (
    CASES,
    TYPE_RULE,
    KStrictPartition,
    SignedPermutation,
    TypedPartition,
    beta,
    beta_bar,
    c_set,
    c_set_untyped,
    covers,
    enumerate_typed,
    fits_rectangle,
    is_k_grassmannian,
    left_weak_leq,
    parse_shape,
    parse_typed,
    partition_to_perm,
    perm_to_partition,
    reduced_word,
    reduced_word_to_top,
    top_partition,
)

EXAMPLE = SignedPermutation((-4, 6, 8, -5, -2, -1, 3, 7))
EXAMPLE_LAMBDA = TypedPartition((7, 4, 3, 3, 1), 3, 2)


@st.composite
def signed_permutations(draw, max_n: int = 6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    values = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    window = [-v if s else v for v, s in zip(values, signs)]
    if sum(signs) % 2 and n:
        window[0] = -window[0]
    return SignedPermutation(tuple(window))


# ============================================================
# 부호 순열
# ============================================================

class TestSignedPermutation:
    def test_lengths(self):
        assert SignedPermutation.identity().length() == 0
        assert SignedPermutation((-1, -2, 3)).length() == 2
        assert EXAMPLE.length() == 18

    def test_trailing_fixed_points_are_equal(self):
        assert SignedPermutation((2, 1)) == SignedPermutation((2, 1, 3, 4))
        assert SignedPermutation((1, 2, 3)) == SignedPermutation.identity()

    def test_rejects_odd_sign_changes(self):
        with pytest.raises(PermutationError):
            SignedPermutation((-1, 2))

    def test_rejects_non_permutation(self):
        with pytest.raises(PermutationError):
            SignedPermutation((1, 1))

    def test_parse(self):
        assert SignedPermutation.parse("-4,6,8,-5,-2,-1,3,7") == EXAMPLE
        assert SignedPermutation.parse("id") == SignedPermutation.identity()
        with pytest.raises(ParseError) as info:
            SignedPermutation.parse("1,x,2")
        assert info.value.position == 2

    def test_simple_reflections(self):
        assert SignedPermutation.simple(0).window == (-2, -1)
        assert SignedPermutation.simple(2).window == (1, 3, 2)
        s0 = SignedPermutation.simple(0)
        assert s0 * s0 == SignedPermutation.identity()

    @settings(max_examples=60, deadline=None)
    @given(signed_permutations())
    def test_inverse(self, w):
        assert w * w.inverse() == SignedPermutation.identity()

    @settings(max_examples=60, deadline=None)
    @given(signed_permutations())
    def test_reduced_word(self, w):
        word = reduced_word(w)
        assert len(word) == w.length()
        assert SignedPermutation.from_word(word) == w

    def test_left_weak_order(self):
        w = SignedPermutation.from_word([1, 0, 2])
        assert left_weak_leq(SignedPermutation.from_word([2]), w)
        assert left_weak_leq(SignedPermutation.identity(), w)


# ============================================================
# 분할과 파싱
# ============================================================

class TestPartitions:
    def test_parse_typed(self):
        assert parse_typed("7,4,3,3,1:t2", 3) == EXAMPLE_LAMBDA
        assert parse_typed("-", 1) == TypedPartition((), 1, 0)
        assert parse_typed("0:t0", 2) == TypedPartition((), 2, 0)

    def test_type_rule_is_quoted(self):
        with pytest.raises(PartitionError) as info:
            parse_typed("1:t0", 1)
        assert TYPE_RULE in str(info.value)
        with pytest.raises(PartitionError):
            parse_typed("2:t1", 1)

    def test_k_strict_violation(self):
        with pytest.raises(PartitionError):
            parse_typed("2,2", 1)
        assert parse_shape("1,1", 1).parts == (1, 1)

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_typed("2,a", 1)
        assert info.value.position == 2
        with pytest.raises(ParseError):
            parse_typed("2:x1", 1)

    def test_lifts_and_dual(self):
        shape = KStrictPartition((2, 1), 1)
        assert [lam.type for lam in shape.lifts()] == [1, 2]
        assert TypedPartition((2, 1), 1, 1).dual() == TypedPartition((2, 1), 1, 2)
        assert TypedPartition((2,), 1, 0).dual() == TypedPartition((2,), 1, 0)

    def test_enumerate(self):
        assert len(enumerate_typed(1, 2, 3)) == 12
        assert len(enumerate_typed(2, 1, 4)) == 6
        assert enumerate_typed(1, 0, 5) == [TypedPartition((), 1, 0)]

    def test_enumerate_order_is_by_size(self):
        sizes = [lam.size for lam in enumerate_typed(2, 3, 4)]
        assert sizes == sorted(sizes)


# ============================================================
# k-Grassmannian 전단사
# ============================================================

class TestBijection:
    def test_example(self):
        assert is_k_grassmannian(EXAMPLE, 3)
        assert perm_to_partition(EXAMPLE, 3) == EXAMPLE_LAMBDA
        assert partition_to_perm(EXAMPLE_LAMBDA) == EXAMPLE

    def test_small_cases(self):
        assert is_k_grassmannian(SignedPermutation.identity(), 2)
        assert perm_to_partition(SignedPermutation((2, 1, 3)), 1) == TypedPartition((1,), 1, 1)
        assert partition_to_perm(TypedPartition((), 2, 0)) == SignedPermutation.identity()
        assert partition_to_perm(TypedPartition((1,), 1, 2)) == SignedPermutation((-2, -1, 3))

    def test_rejects_non_grassmannian(self):
        with pytest.raises(PermutationError):
            perm_to_partition(SignedPermutation((1, 3, 2)), 1)

    @settings(max_examples=150, deadline=None)
    @given(signed_permutations(), st.integers(min_value=1, max_value=3))
    def test_round_trip_from_permutations(self, w, k):
        if is_k_grassmannian(w, k):
            lam = perm_to_partition(w, k)
            assert partition_to_perm(lam) == w
            assert lam.size == w.length()

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_round_trip_from_partitions(self, k):
        for lam in enumerate_typed(k, 3, 4):
            w = partition_to_perm(lam)
            assert perm_to_partition(w, k) == lam
            assert w.length() == lam.size

    def test_c_set(self):
        assert c_set(EXAMPLE_LAMBDA) == {(1, 2), (1, 3), (1, 4), (2, 3)}
        assert c_set(TypedPartition((), 1, 0)) == frozenset()
        assert c_set(TypedPartition((2, 1), 1, 1)) == {(1, 2)}

    @pytest.mark.parametrize("k", [1, 2])
    def test_c_set_matches_part_criterion(self, k):
        for lam in enumerate_typed(k, 3, 5):
            ell = lam.length
            inside = {(i, j) for i, j in c_set(lam) if j <= ell}
            assert inside == c_set_untyped(lam.shape, ell)

    def test_beta(self):
        assert beta(EXAMPLE_LAMBDA) == (-4, -1, 0, 3, 7)
        assert beta(TypedPartition((), 1, 0), rows=3) == (2, 3, 4)
        assert beta(TypedPartition((1,), 1, 1), rows=2) == (1, 3)

    def test_beta_bar(self):
        assert beta_bar(KStrictPartition((2,), 1), rows=2) == (-1, 3)
        assert beta_bar(KStrictPartition((), 1), rows=2) == (2, 3)
        assert beta_bar(KStrictPartition((1,), 1), rows=2) == (1, 3)
        assert beta_bar(KStrictPartition((3, 2), 1)) == (-2, -1)


# ============================================================
# 덮개와 직사각형
# ============================================================

class TestCovers:
    def test_case_d1(self):
        found = {(c.i, c.mu, c.case) for c in covers(TypedPartition((2, 1), 1, 2))}
        assert (1, TypedPartition((1, 1), 1, 2), "d1") in found

    def test_case_g(self):
        found = {(c.i, c.mu, c.case) for c in covers(TypedPartition((2, 1), 1, 1))}
        assert (0, TypedPartition((1, 1), 1, 1), "g") in found

    def test_case_f_with_positive_two_in_front(self):
        lam = TypedPartition((3, 1), 1, 1)
        assert partition_to_perm(lam)(1) == 2
        found = {(c.i, c.case) for c in covers(lam)}
        assert (0, "f") in found

    @pytest.mark.parametrize("k,n", [(1, 5), (2, 5)])
    def test_every_cover_in_rectangle_is_classified(self, k, n):
        cases = set()
        for lam in enumerate_typed(k, n - k, n + k - 1):
            cases.update(cover.case for cover in covers(lam))
        assert cases <= set(CASES)
        assert "f" in cases

    def test_empty_has_no_covers(self):
        assert covers(TypedPartition((), 1, 0)) == []

    @pytest.mark.parametrize("k", [1, 2])
    def test_cover_properties(self, k):
        for lam in enumerate_typed(k, 3, 4):
            w = partition_to_perm(lam)
            for cover in covers(lam):
                v = SignedPermutation.simple(cover.i) * w
                assert v.length() + 1 == w.length()
                assert perm_to_partition(v, k) == cover.mu
                assert cover.mu.size + 1 == lam.size
                diff = [j for j in range(1, lam.length + 1) if lam.part(j) != cover.mu.part(j)]
                assert diff == [cover.p]

    def test_top_partition(self):
        assert top_partition(1, 3) == TypedPartition((3, 2), 1, 0)
        assert top_partition(2, 2) == TypedPartition((), 2, 0)
        with pytest.raises(PartitionError):
            top_partition(3, 2)

    @pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 3)])
    def test_reduced_word_to_top(self, k, n):
        top = top_partition(k, n)
        w_top = partition_to_perm(top)
        for lam in enumerate_typed(k, n - k, n + k - 1):
            word = reduced_word_to_top(lam, k, n)
            assert len(word) == top.size - lam.size
            assert SignedPermutation.from_word(word) == partition_to_perm(lam) * w_top.inverse()
        assert reduced_word_to_top(top, k, n) == ()

    def test_reduced_word_rejects_outside(self):
        lam = TypedPartition((4,), 1, 0)
        assert not fits_rectangle(lam, 3)
        with pytest.raises(PartitionError):
            reduced_word_to_top(lam, 1, 3)

    def test_all_windows_of_size_three(self):
        count = 0
        for values in itertools.permutations((1, 2, 3)):
            for signs in itertools.product((1, -1), repeat=3):
                if signs.count(-1) % 2:
                    continue
                w = SignedPermutation(tuple(v * s for v, s in zip(values, signs)))
                if is_k_grassmannian(w, 1):
                    count += 1
                    assert partition_to_perm(perm_to_partition(w, 1)) == w
        assert count == len(enumerate_typed(1, 2, 3))
