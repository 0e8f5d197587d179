"""다항식 직렬화 (JSON / LaTeX / 텍스트).

JSON 스키마::

    {"terms": [{"coeff": "-1", "vars": {"bt1": 1, "t2": 1}}]}

항은 정준 순서(차수 내림차순 후 사전식)로 출력되므로 같은 다항식은
항상 같은 바이트열이 됩니다.
"""

import json
from fractions import Fraction
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import ParseError
from .polynomial import Monomial, Polynomial
from .variables import parse_variable


class PolynomialTerm(BaseModel):
    """JSON 항 하나."""

    model_config = ConfigDict(extra="forbid")

    coeff: str = Field(..., description="정수 또는 a/b 형태의 유리수 문자열")
    vars: Dict[str, int] = Field(default_factory=dict, description="변수 이름 -> 지수")


class PolynomialPayload(BaseModel):
    """JSON 다항식."""

    model_config = ConfigDict(extra="forbid")

    terms: List[PolynomialTerm] = Field(default_factory=list)


# ============================================================
# JSON
# ============================================================

def to_payload(poly: Polynomial) -> PolynomialPayload:
    return PolynomialPayload(
        terms=[
            PolynomialTerm(coeff=str(coeff), vars={name: exp for name, exp in monomial})
            for monomial, coeff in poly.sorted_terms()
        ]
    )


def from_payload(payload: PolynomialPayload) -> Polynomial:
    terms = []
    for position, term in enumerate(payload.terms):
        try:
            coeff = Fraction(term.coeff)
            for name in term.vars:
                parse_variable(name)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid term ({e})", term.model_dump_json(), position) from e
        terms.append((term.vars, coeff))
    return Polynomial.from_terms(terms)


def to_json(poly: Polynomial) -> str:
    return to_payload(poly).model_dump_json()


def from_json(text: str) -> Polynomial:
    """JSON 문자열을 파싱합니다.

    Raises:
        ParseError: JSON 문법 오류(위치 포함) 또는 스키마 위반
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON ({e.msg})", text, e.pos) from e
    try:
        payload = PolynomialPayload.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"Invalid polynomial schema ({e.error_count()} errors)", text) from e
    return from_payload(payload)


# ============================================================
# 텍스트 / LaTeX
# ============================================================

def _join_terms(pieces: List[tuple]) -> str:
    if not pieces:
        return "0"
    out = []
    for index, (negative, body) in enumerate(pieces):
        if index == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _text_monomial(monomial: Monomial) -> str:
    return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in monomial)


def to_text(poly: Polynomial) -> str:
    pieces = []
    for monomial, coeff in poly.sorted_terms():
        magnitude = abs(coeff)
        body = _text_monomial(monomial)
        if not body:
            body = str(magnitude)
        elif magnitude != 1:
            body = f"{magnitude}*{body}"
        pieces.append((coeff < 0, body))
    return _join_terms(pieces)


def _latex_variable(name: str) -> str:
    kind, index = parse_variable(name)
    if kind == "bt":
        return rf"\widetilde{{b}}_{{{index}}}"
    return f"{kind}_{{{index}}}"


def _latex_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"


def to_latex(poly: Polynomial) -> str:
    pieces = []
    for monomial, coeff in poly.sorted_terms():
        magnitude = abs(coeff)
        body = " ".join(
            _latex_variable(name) if exp == 1 else f"{_latex_variable(name)}^{{{exp}}}"
            for name, exp in monomial
        )
        if not body:
            body = _latex_coefficient(magnitude)
        elif magnitude != 1:
            body = f"{_latex_coefficient(magnitude)} {body}"
        pieces.append((coeff < 0, body))
    return _join_terms(pieces)


def render(poly: Polynomial, fmt: str) -> str:
    """fmt: json | latex | text."""
    if fmt == "json":
        return to_json(poly)
    if fmt == "latex":
        return to_latex(poly)
    return to_text(poly)
