"""Z[b,t] 다항식 환 모듈.

정확한 희소 다항식, 이름 붙은 다항식 족, W̃_∞ 작용과 분할 차분,
그리고 JSON/LaTeX/텍스트 직렬화를 제공합니다.

Modules:
    polynomial: sympy PolyRing 기반 불변 다항식
    families: c_p, e/h, c^r_p, a^s_p, b^s_k, f-변형, ĉ^r_p
    action: s_i 작용, ∂_i
    serialization: JSON 스키마, LaTeX, 텍스트 출력
"""

from .polynomial import Polynomial, Monomial, monomial_degree, as_polynomial
from .variables import parse_variable, variable_degree, variable_sort_key
from .families import (
    FVariant,
    b,
    btilde,
    t,
    c,
    e_sym,
    h_sym,
    c_r,
    a_s,
    b_s,
    btilde_s,
    f_k,
    f_s,
    ftilde,
    ftilde_s,
    c_hat,
    row_variant,
)
from .action import weyl_action, divided_difference, divided_difference_01, root_form
from .serialization import (
    PolynomialTerm,
    PolynomialPayload,
    to_payload,
    from_payload,
    to_json,
    from_json,
    to_latex,
    to_text,
    render,
)

__all__ = [
    # Polynomial
    "Polynomial",
    "Monomial",
    "monomial_degree",
    "as_polynomial",
    "parse_variable",
    "variable_degree",
    "variable_sort_key",
    # Families
    "FVariant",
    "b",
    "btilde",
    "t",
    "c",
    "e_sym",
    "h_sym",
    "c_r",
    "a_s",
    "b_s",
    "btilde_s",
    "f_k",
    "f_s",
    "ftilde",
    "ftilde_s",
    "c_hat",
    "row_variant",
    # Weyl action
    "weyl_action",
    "divided_difference",
    "divided_difference_01",
    "root_form",
    # Serialization
    "PolynomialTerm",
    "PolynomialPayload",
    "to_payload",
    "from_payload",
    "to_json",
    "from_json",
    "to_latex",
    "to_text",
    "render",
]
