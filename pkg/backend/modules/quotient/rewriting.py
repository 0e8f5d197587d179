"""J^(k) 정규형 재작성.

규칙 (c 는 b 로 전개):
    b_p^2   -> -Σ_{i=1}^p (-1)^i b_{p+i} c_{p-i}      (p > k)
    b_k b̃_k -> -Σ_{i=1}^k (-1)^i b_{k+i} b_{k-i}

t 변수는 J^(k) 와 무관하므로 각 항의 b 부분만 재작성합니다.
기본 전략은 가장 큰 첨자의 위반 인수부터 재작성하며, 단항식별 결과를 메모이즈합니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..polyring import Monomial, Polynomial, b, btilde, c, parse_variable, variable_sort_key

logger = logging.getLogger(__name__)

Exponents = Dict[str, int]
Rule = Tuple[str, int]  # ("square", p) 또는 ("pair", k)


def _canon(exps: Exponents) -> Monomial:
    return tuple(sorted(((n, e) for n, e in exps.items() if e), key=lambda it: variable_sort_key(it[0])))


def split_monomial(monomial: Monomial) -> Tuple[Monomial, Monomial]:
    b_part = tuple((n, e) for n, e in monomial if not n.startswith("t"))
    t_part = tuple((n, e) for n, e in monomial if n.startswith("t"))
    return b_part, t_part


def _merge(left: Monomial, right: Monomial) -> Monomial:
    exps: Exponents = dict(left)
    for name, exp in right:
        exps[name] = exps.get(name, 0) + exp
    return _canon(exps)


def _c_terms(q: int, k: int) -> List[Tuple[Exponents, int]]:
    if q == 0:
        return [({}, 1)]
    if q < k:
        return [({f"b{q}": 1}, 1)]
    if q == k:
        return [({f"b{k}": 1}, 1), ({f"bt{k}": 1}, 1)]
    return [({f"b{q}": 1}, 2)]


def _available_rules(exps: Exponents, k: int) -> List[Rule]:
    rules: List[Rule] = []
    for name, exp in exps.items():
        kind, index = parse_variable(name)
        if kind == "bt" and index != k:
            raise ValueError(f"{name} does not belong to the ring for k={k}")
        if kind == "b" and index > k and exp >= 2:
            rules.append(("square", index))
    if exps.get(f"b{k}") and exps.get(f"bt{k}"):
        rules.append(("pair", k))
    return sorted(rules, key=lambda rule: rule[1], reverse=True)


def _apply(exps: Exponents, rule: Rule, k: int) -> List[Tuple[Monomial, Fraction]]:
    """규칙 하나를 적용한 결과 항들."""
    kind, p = rule
    cofactor = dict(exps)
    out: List[Tuple[Monomial, Fraction]] = []
    if kind == "square":
        cofactor[f"b{p}"] -= 2
        for i in range(1, p + 1):
            sign = -((-1) ** i)
            for c_exps, c_coeff in _c_terms(p - i, k):
                term = dict(cofactor)
                term[f"b{p + i}"] = term.get(f"b{p + i}", 0) + 1
                for name, e in c_exps.items():
                    term[name] = term.get(name, 0) + e
                out.append((_canon(term), Fraction(sign * c_coeff)))
    else:
        cofactor[f"b{k}"] -= 1
        cofactor[f"bt{k}"] -= 1
        for i in range(1, k + 1):
            sign = -((-1) ** i)
            term = dict(cofactor)
            term[f"b{k + i}"] = term.get(f"b{k + i}", 0) + 1
            if k - i > 0:
                term[f"b{k - i}"] = term.get(f"b{k - i}", 0) + 1
            out.append((_canon(term), Fraction(sign)))
    return out


@lru_cache(maxsize=None)
def _reduce_b_monomial(monomial: Monomial, k: int) -> Tuple[Tuple[Monomial, Fraction], ...]:
    exps = dict(monomial)
    rules = _available_rules(exps, k)
    if not rules:
        return ((monomial, Fraction(1)),)
    acc: Dict[Monomial, Fraction] = {}
    for term, coeff in _apply(exps, rules[0], k):
        for reduced, sub in _reduce_b_monomial(term, k):
            acc[reduced] = acc.get(reduced, Fraction(0)) + coeff * sub
    return tuple((m, v) for m, v in acc.items() if v)


def is_reduced(monomial: Monomial, k: int) -> bool:
    b_part, _ = split_monomial(monomial)
    return not _available_rules(dict(b_part), k)


def _normal_form_randomized(poly: Polynomial, k: int, rng: np.random.Generator) -> Polynomial:
    """무작위 순서 재작성 (합류성 검사용)."""
    pending: Dict[Monomial, Fraction] = dict(poly.terms())
    done: Dict[Monomial, Fraction] = {}
    while pending:
        keys = sorted(pending, key=repr)
        monomial = keys[int(rng.integers(len(keys)))]
        coeff = pending.pop(monomial)
        b_part, t_part = split_monomial(monomial)
        rules = _available_rules(dict(b_part), k)
        if not rules:
            done[monomial] = done.get(monomial, Fraction(0)) + coeff
            continue
        rule = rules[int(rng.integers(len(rules)))]
        for term, sub in _apply(dict(b_part), rule, k):
            key = _merge(term, t_part)
            value = pending.get(key, Fraction(0)) + coeff * sub
            if value:
                pending[key] = value
            else:
                pending.pop(key, None)
    return Polynomial.from_terms(done.items())


def normal_form(poly: Polynomial, k: int, rng: Optional[np.random.Generator] = None) -> Polynomial:
    """재작성의 고정점. b_p^2 (p>k) 와 b_k b̃_k 를 포함하지 않습니다.

    Args:
        poly: Z[b,t] 원소
        k: 양의 정수
        rng: 지정하면 무작위 재작성 순서 사용

    Returns:
        Polynomial: 정규형
    """
    if rng is not None:
        return _normal_form_randomized(poly, k, rng)
    acc: Dict[Monomial, Fraction] = {}
    for monomial, coeff in poly.terms():
        b_part, t_part = split_monomial(monomial)
        for reduced, sub in _reduce_b_monomial(b_part, k):
            key = _merge(reduced, t_part)
            acc[key] = acc.get(key, Fraction(0)) + coeff * sub
    return Polynomial.from_terms(acc.items())


def eq_mod_ideal(f: Polynomial, g: Polynomial, k: int) -> bool:
    return normal_form(f - g, k).is_zero


# ============================================================
# 재작성 시스템과 생성원
# ============================================================

@dataclass(frozen=True)
class RewriteSystem:
    """J^(k) 의 재작성 규칙 묶음."""

    k: int

    def relation_square(self, p: int) -> Polynomial:
        """b_p^2 + Σ_{i=1}^p (-1)^i b_{p+i} c_{p-i}  (p > k)."""
        if p <= self.k:
            raise ValueError(f"Square relation needs p > k (p={p}, k={self.k})")
        total = b(p) ** 2
        for i in range(1, p + 1):
            total = total + b(p + i) * c(p - i, self.k) * ((-1) ** i)
        return total

    def relation_pair(self) -> Polynomial:
        """b_k b̃_k + Σ_{i=1}^k (-1)^i b_{k+i} b_{k-i}."""
        k = self.k
        total = b(k) * btilde(k)
        for i in range(1, k + 1):
            total = total + b(k + i) * b(k - i) * ((-1) ** i)
        return total

    def generators(self, max_p: int) -> List[Polynomial]:
        return [self.relation_pair()] + [self.relation_square(p) for p in range(self.k + 1, max_p + 1)]

    def normal_form(self, poly: Polynomial, rng: Optional[np.random.Generator] = None) -> Polynomial:
        return normal_form(poly, self.k, rng)

    def describe(self) -> List[str]:
        k = self.k
        return [
            f"b_p^2 -> -sum_(i=1..p) (-1)^i b_(p+i) c_(p-i)   for p > {k}",
            f"b_{k} bt_{k} -> -sum_(i=1..{k}) (-1)^i b_({k}+i) b_({k}-i)",
        ]


def reduced_monomial_count(k: int, d: int) -> int:
    """차수 d 의 기약 b-단항식 개수 (분할 열거와 독립적으로 셈)."""

    @lru_cache(maxsize=None)
    def count(p: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if p > remaining:
            return 0
        if p < k:
            return sum(count(p + 1, remaining - e * p) for e in range(remaining // p + 1))
        if p == k:
            # b_k^e 또는 b̃_k^e (e >= 1), 또는 둘 다 없음
            total = count(p + 1, remaining)
            total += 2 * sum(count(p + 1, remaining - e * p) for e in range(1, remaining // p + 1))
            return total
        return count(p + 1, remaining) + count(p + 1, remaining - p)

    return count(1, d)
