"""Z[b,t] 다항식, 이름 붙은 족, W̃_∞ 작용 테스트.

사용법:
    uv run pytest backend/test/test_polyring.py
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

# Add backend to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from modules.errors import InexactDivisionError, ParseError
from modules.polyring import (
    FVariant,
    Polynomial,
    a_s,
    b,
    btilde,
    c,
    c_hat,
    c_r,
    divided_difference,
    divided_difference_01,
    e_sym,
    f_k,
    from_json,
    ftilde,
    h_sym,
    root_form,
    t,
    to_json,
    to_latex,
    to_text,
    weyl_action,
)


# ============================================================
# Polynomial
# ============================================================

class TestPolynomial:
    def test_from_terms_merges(self):
        poly = Polynomial.from_terms([({"b1": 1}, 2), ((("b1", 1),), -1), ({}, 3)])
        assert poly == b(1) + 3

    def test_zero_and_one(self):
        assert Polynomial.zero().is_zero
        assert not Polynomial.one().is_zero
        assert Polynomial.zero().degree() is None

    def test_degree_uses_weights(self):
        poly = b(3) * t(1) + btilde(2)
        assert poly.degree() == 4
        assert not poly.is_homogeneous()
        assert (b(2) * t(1) + t(1) * t(2) * t(3)).is_homogeneous()

    def test_exact_div(self):
        assert (t(1) ** 2 - t(2) ** 2).exact_div(t(1) - t(2)) == t(1) + t(2)
        with pytest.raises(InexactDivisionError):
            (t(1) + 1).exact_div(t(2))

    def test_substitute_is_simultaneous(self):
        poly = t(1) - t(2) * 2
        swapped = poly.substitute({"t1": t(2), "t2": t(1)})
        assert swapped == t(2) - t(1) * 2

    def test_swap(self):
        poly = t(1) ** 2 * t(3) - b(2) * t(3)
        assert poly.swap("t1", "t3") == t(3) ** 2 * t(1) - b(2) * t(1)
        assert poly.swap("t4", "t5") == poly

    def test_divide_linear(self):
        poly = (t(1) + t(2)) * (b(1) * t(1) + t(2) ** 3 - 2)
        assert poly.divide_linear("t1", "t2", 1) == b(1) * t(1) + t(2) ** 3 - 2
        diff = t(3) ** 2 - t(2) ** 2
        assert diff.divide_linear("t3", "t2", -1) == t(3) + t(2)
        assert Polynomial.zero().divide_linear("t1", "t2", 1).is_zero
        with pytest.raises(InexactDivisionError):
            (t(1) * t(2) + 1).divide_linear("t1", "t2", 1)

    def test_at_zero_t_and_negate_t(self):
        poly = b(2) + b(1) * t(1) + t(1) * t(2)
        assert poly.at_zero_t() == b(2)
        assert poly.negate_t() == b(2) - b(1) * t(1) + t(1) * t(2)

    def test_integrality(self):
        assert (b(1) / 2 * 2).is_integral()
        assert not (b(1) * Fraction(1, 2)).is_integral()

    def test_variables_sorted(self):
        poly = t(2) + b(3) + btilde(1) + b(1)
        assert poly.variables() == ["bt1", "b1", "b3", "t2"]


# ============================================================
# 직렬화
# ============================================================

class TestSerialization:
    def test_text(self):
        assert to_text(b(1) - t(1)) == "b1 - t1"
        assert to_text(Polynomial.zero()) == "0"
        assert to_text(b(1) * b(2) * 2 - 3) == "2*b1*b2 - 3"

    def test_latex(self):
        assert to_latex(btilde(1) - t(1)) == r"\widetilde{b}_{1} - t_{1}"
        assert to_latex(b(2) * Fraction(1, 2)) == r"\frac{1}{2} b_{2}"

    def test_json_is_canonical(self):
        poly = b(1) - t(1)
        data = json.loads(to_json(poly))
        assert data == {"terms": [{"coeff": "1", "vars": {"b1": 1}}, {"coeff": "-1", "vars": {"t1": 1}}]}

    def test_json_round_trip(self):
        poly = b(3) * btilde(1) * Fraction(1, 2) - t(1) ** 2 * b(1) + 7
        assert from_json(to_json(poly)) == poly

    def test_json_errors(self):
        with pytest.raises(ParseError) as info:
            from_json('{"terms": [')
        assert info.value.position is not None
        with pytest.raises(ParseError):
            from_json('{"terms": [{"coeff": "1", "vars": {"x1": 1}}]}')
        with pytest.raises(ParseError):
            from_json('{"terms": [], "extra": 1}')


# ============================================================
# 이름 붙은 족
# ============================================================

class TestFamilies:
    def test_c(self):
        assert c(0, 1) == 1
        assert c(-1, 1) == 0
        assert c(1, 2) == b(1)
        assert c(2, 2) == b(2) + btilde(2)
        assert c(3, 1) == b(3) * 2

    def test_symmetric(self):
        assert e_sym(2, 2, True) == t(1) * t(2)
        assert e_sym(1, 2, True) == -t(1) - t(2)
        assert h_sym(2, 1, True) == t(1) ** 2
        assert h_sym(1, -2, True) == e_sym(1, 2, True)
        assert e_sym(3, 2) == 0

    def test_c_r(self):
        assert c_r(1, 1, 1) == c(1, 1) - t(1)
        assert c_r(2, 0, 1) == c(2, 1)
        assert c_r(1, -1, 1) == c(1, 1) - t(1)

    def test_a_s(self):
        assert a_s(0, 1, 1) == Fraction(1, 2)
        assert a_s(2, 1, 1) == b(2) + c(1, 1) * (-t(1)) + t(1) ** 2

    def test_f_variants(self):
        assert f_k(1, FVariant.BK) == b(1)
        assert f_k(1, FVariant.AK) == c(1, 1) * Fraction(1, 2)
        assert ftilde(1, FVariant.BK) == btilde(1)

    def test_c_hat_even_row(self):
        expected = c_r(2, -1, 1) - t(1) * (b(1) * 2 - c(1, 1))
        assert c_hat(2, -1, 1, FVariant.BK) == expected
        assert c_hat(2, -1, 1, FVariant.BK) == c_r(2, -1, 1) - t(1) * (b(1) - btilde(1))

    def test_c_hat_without_correction(self):
        assert c_hat(2, 1, 1, FVariant.BK) == c_r(2, 1, 1)
        assert c_hat(3, -1, 1, FVariant.BTILDE_K) == c_r(3, -1, 1)


# ============================================================
# 작용과 분할 차분
# ============================================================

class TestWeylAction:
    def test_s_i_swaps(self):
        assert weyl_action(1, t(1) + b(2), 1) == t(2) + b(2)
        assert weyl_action(2, t(1) * t(2), 1) == t(1) * t(3)

    def test_s0_on_t(self):
        assert weyl_action(0, t(1), 1) == -t(2)
        assert weyl_action(0, t(3), 1) == t(3)

    def test_s0_on_b(self):
        assert weyl_action(0, b(1), 1) == b(1) - t(1) - t(2)
        assert weyl_action(0, b(1), 2) == b(1) - (t(1) + t(2)) * 2
        assert weyl_action(0, btilde(1), 1) == btilde(1) - t(1) - t(2)

    def test_divided_differences(self):
        assert divided_difference(1, t(1), 1) == -1
        assert divided_difference(0, b(1), 1) == 1
        assert divided_difference(2, b(3), 1) == 0
        assert divided_difference_01(b(1), 1) == 1

    def test_root_form(self):
        assert root_form(0) == t(1) + t(2)
        assert root_form(3) == t(4) - t(3)

    def test_rejects_negative_index(self):
        with pytest.raises(ValueError):
            weyl_action(-1, t(1), 1)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_s0_matches_simultaneous_substitution(self, k):
        poly = b(1) * b(k + 1) * t(1) ** 2 - btilde(k) * t(2) * t(3) + c_r(3, 2, k) * b(2)
        images = {
            "t1": -t(2),
            "t2": -t(1),
            "b1": b(1) - (t(1) + t(2)) * c_r(0, 2, k) * (2 if 1 < k else 1),
            "b2": b(2) - (t(1) + t(2)) * c_r(1, 2, k) * (2 if 2 < k else 1),
            "b3": b(3) - (t(1) + t(2)) * c_r(2, 2, k) * (2 if 3 < k else 1),
            f"b{k + 1}": b(k + 1) - (t(1) + t(2)) * c_r(k, 2, k),
            f"bt{k}": btilde(k) - (t(1) + t(2)) * c_r(k - 1, 2, k),
        }
        assert weyl_action(0, poly, k) == poly.substitute(images)

    @pytest.mark.parametrize("i", [0, 1, 2, 3])
    def test_divided_difference_times_root(self, i):
        k = 2
        poly = c_r(4, 3, k) * c_r(2, -2, k) + btilde(k) * t(1) ** 3 * t(4)
        quotient = divided_difference(i, poly, k)
        assert quotient * root_form(i) == poly - weyl_action(i, poly, k)

    def test_s0_involution_on_generators(self):
        for k in (1, 2, 3):
            for poly in [b(1), b(2), b(k + 1), btilde(k), t(1) * b(2)]:
                assert weyl_action(0, weyl_action(0, poly, k), k) == poly
