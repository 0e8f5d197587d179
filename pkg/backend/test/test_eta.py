"""이중 eta 다항식 테스트.

기준표, 상승 연산자 전개, ⋆ 치환, 최상위 클래스, ∂ 재구성, Ĥ 합 공식을 확인합니다.

사용법:
    uv run pytest backend/test/test_eta.py
    uv run pytest backend/test/test_eta.py -k table
"""

import sys
from pathlib import Path

# Add backend to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from modules.eta import (
    RaisingMonomial,
    StarContext,
    double_eta,
    double_eta_dual,
    double_eta_hat,
    eta_via_divided_differences,
    expand_raising,
    get_eta_cache_stats,
    single_eta,
    star_apply,
    top_class,
)
from modules.eta import polynomials as eta_polynomials
from modules.errors import PartitionError
from modules.polyring import Polynomial, b, btilde, t
from modules.quotient import eq_mod_ideal
from modules.verify import double_eta_table, hat_table
from modules.weyl import KStrictPartition, TypedPartition, beta, enumerate_typed, top_partition


def _ids(table):
    return [f"k={index.k}:{index}" for index, _ in table]


# ============================================================
# 기준표
# ============================================================

class TestTables:
    @pytest.mark.parametrize("lam,build", double_eta_table(), ids=_ids(double_eta_table()))
    def test_double_eta_table(self, lam, build):
        assert double_eta(lam) == build()

    @pytest.mark.parametrize("shape,build", hat_table(), ids=_ids(hat_table()))
    def test_hat_table(self, shape, build):
        assert double_eta_hat(shape) == build()

    def test_table_sizes(self):
        assert len(double_eta_table()) == 17
        assert len(hat_table()) == 12


# ============================================================
# H_λ 의 기본 성질
# ============================================================

class TestDoubleEta:
    def test_small_values(self):
        assert double_eta(TypedPartition((), 1, 0)) == 1
        assert double_eta(TypedPartition((1,), 1, 1)) == b(1) - t(1)
        assert double_eta(TypedPartition((1,), 1, 2)) == btilde(1)

    def test_single_eta(self):
        assert single_eta(TypedPartition((2, 1), 1, 1)) == b(2) * b(1) - b(3)
        assert single_eta(TypedPartition((1,), 1, 1)) == b(1)

    def test_dual(self):
        lam = TypedPartition((1,), 1, 1)
        assert double_eta_dual(lam) == double_eta(lam.dual())
        zero_type = TypedPartition((2,), 1, 0)
        assert double_eta_dual(zero_type) == double_eta(zero_type)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_homogeneous_integral(self, k):
        for lam in enumerate_typed(k, 3, 4):
            poly = double_eta(lam)
            assert poly.is_integral()
            assert poly.is_homogeneous()
            if lam.parts:
                assert poly.degree() == lam.size

    def test_cache_stats(self):
        double_eta(TypedPartition((2,), 1, 0))
        double_eta(TypedPartition((2,), 1, 0))
        stats = get_eta_cache_stats()
        assert stats["double_eta"]["hits"] >= 1
        assert set(stats) == {"double_eta", "double_eta_hat", "top_class"}


# ============================================================
# 상승 연산자와 ⋆ 치환
# ============================================================

class TestRaising:
    def test_expand_with_pair_in_c(self):
        terms = [(m.nu, m.coeff) for m in expand_raising(TypedPartition((2, 1), 1, 1))]
        assert terms == [((2, 1), 1), ((3, 0), -2)]

    def test_expand_without_pair_in_c(self):
        terms = {m.nu: m.coeff for m in expand_raising(TypedPartition((1, 1), 1, 1))}
        assert terms == {(1, 1): 1, (2, 0): -1}

    def test_single_row_is_identity(self):
        terms = expand_raising(KStrictPartition((4,), 2))
        assert len(terms) == 1 and terms[0].is_identity

    def test_support_and_touches(self):
        R = RaisingMonomial(exponents=(((1, 2), 1),), coeff=-1, nu=(3, 0))
        assert R.support(3) == frozenset({1, 2})
        assert R.support(2) == frozenset()
        assert R.touches(2) and not R.touches(3)


class TestStar:
    @pytest.mark.parametrize("type_,expected", [(1, b(1) - t(1)), (2, btilde(1))])
    def test_identity_monomial(self, type_, expected):
        lam = TypedPartition((1,), 1, type_)
        ctx = StarContext(k=1, beta=beta(lam), type=type_, m=lam.ell_k + 1)
        R = RaisingMonomial(exponents=(), coeff=1, nu=(1,))
        assert star_apply(R, ctx) == expected

    def test_negative_row_is_rejected(self):
        ctx = StarContext(k=1, beta=(0, 1), type=0, m=3)
        R = RaisingMonomial(exponents=(((1, 2), 2),), coeff=2, nu=(3, -1))
        with pytest.raises(PartitionError):
            star_apply(R, ctx)

    def test_negative_beta_beyond_m(self):
        with pytest.raises(ValueError):
            StarContext(k=1, beta=(-1,), type=1, m=1)


# ============================================================
# 최상위 클래스와 ∂ 재구성
# ============================================================

class TestTopClass:
    @pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 3), (2, 4)])
    def test_matches_double_eta(self, k, n):
        assert top_class(k, n) == double_eta(top_partition(k, n))

    def test_all_pairs_terms(self):
        assert eta_polynomials._all_pairs_terms((3, 2)) == {
            ((3, 2), frozenset()): 1,
            ((4, 1), frozenset({1, 2})): -2,
            ((5, 0), frozenset({1, 2})): 2,
        }

    def test_independent_of_star_substitution(self, monkeypatch):
        expected = double_eta(top_partition(1, 3))

        def forbidden(*args, **kwargs):
            raise AssertionError("top class must not use the raising expansion of H")

        monkeypatch.setattr(eta_polynomials, "star_apply", forbidden)
        monkeypatch.setattr(eta_polynomials, "expand_raising", forbidden)
        assert top_class.__wrapped__(1, 3) == expected

    def test_empty_top(self):
        assert top_class(2, 2) == Polynomial.one()

    def test_rejects_small_n(self):
        with pytest.raises(PartitionError):
            top_class(3, 2)

    @pytest.mark.parametrize("k,n", [(1, 3), (2, 3)])
    def test_reconstruct(self, k, n):
        for lam in enumerate_typed(k, n - k, n + k - 1):
            got = eta_via_divided_differences(lam, k, n)
            assert eq_mod_ideal(got, double_eta(lam), k)


# ============================================================
# Ĥ_λ
# ============================================================

class TestHat:
    @pytest.mark.parametrize("k", [1, 2])
    def test_sum_over_types(self, k):
        for lam in enumerate_typed(k, 3, 4):
            shape = lam.shape
            total = Polynomial.zero()
            for lift in shape.lifts():
                total = total + double_eta(lift)
            assert double_eta_hat(shape) == total

    def test_hat_of_part_k(self):
        shape = KStrictPartition((1,), 1)
        assert double_eta_hat(shape) == b(1) + btilde(1) - t(1)
