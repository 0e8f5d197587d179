"""J^(k) 정규형과 B^(k)[t] 기저 전개 테스트.

사용법:
    uv run pytest backend/test/test_quotient.py
"""

import json
import sys
from pathlib import Path

# Add backend to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from modules.eta import double_eta
from modules.errors import PartitionError
from modules.polyring import Polynomial, b, btilde, t
from modules.quotient import (
    RewriteSystem,
    b_lambda,
    eq_mod_ideal,
    expand_in_b_basis,
    expand_in_eta_basis,
    expansion_entries,
    is_reduced,
    monomial_partition,
    normal_form,
    reduced_monomial_count,
    typed_partition_count,
)
from modules.verify import basis_checks
from modules.weyl import TypedPartition, enumerate_typed


# ============================================================
# 정규형
# ============================================================

class TestNormalForm:
    def test_square_rule(self):
        assert normal_form(b(2) ** 2, 1) == b(1) * b(3) + btilde(1) * b(3) - b(4)

    def test_pair_rule(self):
        assert normal_form(b(1) * btilde(1), 1) == b(2)
        assert normal_form(b(2) * btilde(2), 2) == b(3) * b(1) - b(4)

    def test_t_factors_ride_along(self):
        poly = t(1) * t(2) * b(2) ** 2
        assert normal_form(poly, 1) == t(1) * t(2) * normal_form(b(2) ** 2, 1)

    def test_reduced_input_is_fixed(self):
        poly = b(1) ** 3 + b(3) * b(2) * t(1) + btilde(1) ** 2
        assert normal_form(poly, 1) == poly

    def test_output_is_reduced(self):
        poly = (b(1) + b(2) + b(3) + btilde(1)) ** 3
        for monomial, _ in normal_form(poly, 1).terms():
            assert is_reduced(monomial, 1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_generators_vanish(self, k):
        for relation in RewriteSystem(k).generators(k + 4):
            assert eq_mod_ideal(relation, Polynomial.zero(), k)

    @pytest.mark.parametrize("k", [1, 2])
    def test_rewrite_order_does_not_matter(self, k):
        poly = (b(k) + btilde(k) + b(k + 1) + t(1)) ** 3 + b(k + 2) ** 2 * b(k + 1)
        expected = normal_form(poly, k)
        for seed in range(5):
            rng = np.random.default_rng([seed, k])
            assert normal_form(poly, k, rng=rng) == expected

    def test_rejects_foreign_btilde(self):
        with pytest.raises(ValueError):
            normal_form(btilde(2) * b(1), 1)

    def test_describe(self):
        lines = RewriteSystem(2).describe()
        assert len(lines) == 2
        assert "b_2 bt_2" in lines[1]


# ============================================================
# 기저
# ============================================================

class TestBasis:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_reduced_monomials_match_typed_partitions(self, k):
        for d in range(0, 9):
            assert reduced_monomial_count(k, d) == typed_partition_count(k, d)

    def test_b_lambda(self):
        assert b_lambda(TypedPartition((2, 1), 1, 1)) == b(2) * b(1)
        assert b_lambda(TypedPartition((2, 1), 1, 2)) == b(2) * btilde(1)
        assert b_lambda(TypedPartition((1, 1), 1, 1)) == b(1) * (b(1) + btilde(1))
        assert b_lambda(TypedPartition((), 2, 0)) == 1

    def test_monomial_partition(self):
        monomial = (("bt1", 2), ("b3", 1))
        assert monomial_partition(monomial, 1) == TypedPartition((3, 1, 1), 1, 2)
        assert monomial_partition((("b1", 1), ("b3", 1)), 1) == TypedPartition((3, 1), 1, 1)
        assert monomial_partition((("b2", 2),), 3) == TypedPartition((2, 2), 3, 0)

    def test_monomial_partition_rejects_both_k_factors(self):
        with pytest.raises(PartitionError):
            monomial_partition((("bt1", 1), ("b1", 1), ("b3", 1)), 1)

    @pytest.mark.parametrize("k", [1, 2])
    def test_b_expansion_matches_basis_sum(self, k):
        for lam in enumerate_typed(k, 2, 4):
            expansion = expand_in_b_basis(double_eta(lam), k)
            total = Polynomial.zero()
            for mu, coeff in expansion.items():
                total = total + coeff * b_lambda(mu)
            assert eq_mod_ideal(total, double_eta(lam), k)

    @pytest.mark.parametrize("k", [1, 2])
    def test_b_basis_is_identity_on_basis(self, k):
        for lam in enumerate_typed(k, 3, 4):
            expansion = expand_in_b_basis(b_lambda(lam) * t(1), k)
            assert expansion == {lam: t(1)}

    @pytest.mark.parametrize("k", [1, 2])
    def test_eta_basis_is_identity_on_eta(self, k):
        for lam in enumerate_typed(k, 2, 3):
            expansion = expand_in_eta_basis(double_eta(lam), k)
            assert expansion == {lam: Polynomial.one()}

    def test_eta_expansion_reconstructs(self):
        poly = b(2) ** 2 + t(1) * b(1)
        expansion = expand_in_eta_basis(poly, 1)
        total = Polynomial.zero()
        for lam, coeff in expansion.items():
            total = total + coeff * double_eta(lam)
        assert eq_mod_ideal(total, poly, 1)

    @pytest.mark.parametrize("k,d", [(1, 4), (2, 4), (3, 3)])
    def test_triangularity(self, k, d):
        assert all(check.passed for check in basis_checks(k, d))

    def test_expansion_entries_serialize(self):
        entries = expansion_entries(expand_in_b_basis(b(1) - t(1), 1))
        data = [json.loads(entry.model_dump_json()) for entry in entries]
        assert [row["partition"] for row in data] == ["-", "1:t1"]
        assert data[0]["coeff"] == {"terms": [{"coeff": "-1", "vars": {"t1": 1}}]}
