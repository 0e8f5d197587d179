"""Z[b,t] 위의 정확한 희소 다항식.

sympy의 ``PolyRing`` (계수 QQ) 원소를 감싸는 불변 값 객체입니다.
생성원 집합은 필요할 때마다 늘어납니다: 두 다항식을 연산할 때
두 변수 집합의 합집합으로 만든 링으로 옮긴 뒤 계산합니다.

계수는 내부적으로 유리수이며, 정수성은 호출 측에서
``is_integral()``로 확인합니다 (H_λ 정의가 중간에 2^{-ℓ}을 곱하기 때문).

Examples:
    >>> b1 = Polynomial.var("b1")
    >>> t1 = Polynomial.var("t1")
    >>> str(b1 - t1)
    'b1 - t1'
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import InexactDivisionError
from .variables import parse_variable, variable_degree, variable_sort_key

# 단항식: (변수 이름, 지수) 쌍의 정렬된 튜플, 지수는 모두 양수
Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]

# 빈 생성원 집합을 피하기 위한 기본 생성원
_BASE_NAMES: Tuple[str, ...] = ("t1",)


@lru_cache(maxsize=None)
def _ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(names, QQ, lex)


@lru_cache(maxsize=None)
def _ring_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(symbol.name for symbol in ring.symbols)


def _canonical(names: Iterable[str]) -> Tuple[str, ...]:
    merged = set(names) | set(_BASE_NAMES)
    return tuple(sorted(merged, key=variable_sort_key))


def _qq(value):
    if isinstance(value, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(value, int):
        return QQ(value)
    return QQ(int(value.numerator), int(value.denominator))


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _lift(rep: PolyElement, ring: PolyRing) -> PolyElement:
    """rep을 더 큰 생성원 집합의 ring으로 옮깁니다."""
    if rep.ring == ring:
        return rep
    target = _ring_names(ring)
    positions = [target.index(name) for name in _ring_names(rep.ring)]
    width = len(target)
    lifted = {}
    for monom, coeff in rep.items():
        exps = [0] * width
        for pos, exp in zip(positions, monom):
            exps[pos] = exp
        lifted[tuple(exps)] = coeff
    return ring.from_dict(lifted)


def _unify(*reps: PolyElement) -> List[PolyElement]:
    rings = {rep.ring for rep in reps}
    if len(rings) == 1:
        return list(reps)
    names = set()
    for ring in rings:
        names.update(_ring_names(ring))
    ring = _ring(_canonical(names))
    return [_lift(rep, ring) for rep in reps]


class Polynomial:
    """불변 희소 다항식.

    같은 다항식이면 변수 집합 표현이 달라도 ``==``와 ``hash``가 일치합니다.
    """

    __slots__ = ("_rep", "_hash")

    def __init__(self, rep: PolyElement):
        self._rep = rep
        self._hash: Optional[int] = None

    # ============================================================
    # 생성자
    # ============================================================

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(_ring(_BASE_NAMES).zero)

    @classmethod
    def one(cls) -> "Polynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        ring = _ring(_BASE_NAMES)
        return cls(ring.from_dict({(0,) * ring.ngens: _qq(value)}) if value else ring.zero)

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        parse_variable(name)
        ring = _ring(_canonical([name]))
        return cls(ring.gens[_ring_names(ring).index(name)])

    @classmethod
    def from_terms(
        cls, terms: Iterable[Tuple[Union[Monomial, Mapping[str, int]], Scalar]]
    ) -> "Polynomial":
        """(단항식, 계수) 쌍들로부터 다항식을 만듭니다. 같은 단항식은 합산됩니다."""
        collected: Dict[Monomial, Fraction] = {}
        for monomial, coeff in terms:
            items = monomial.items() if isinstance(monomial, Mapping) else monomial
            key = tuple(sorted(((name, exp) for name, exp in items if exp), key=lambda it: variable_sort_key(it[0])))
            for name, exp in key:
                parse_variable(name)
                if exp < 0:
                    raise ValueError(f"Negative exponent for {name}")
            collected[key] = collected.get(key, Fraction(0)) + Fraction(coeff)
        names = {name for key in collected for name, _ in key}
        ring = _ring(_canonical(names))
        index = {name: i for i, name in enumerate(_ring_names(ring))}
        rep = {}
        for key, coeff in collected.items():
            if not coeff:
                continue
            exps = [0] * ring.ngens
            for name, exp in key:
                exps[index[name]] = exp
            rep[tuple(exps)] = _qq(coeff)
        return cls(ring.from_dict(rep))

    # ============================================================
    # 산술
    # ============================================================

    @staticmethod
    def _coerce(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _unify(self._rep, other._rep)
        return Polynomial(a + b)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _unify(self._rep, other._rep)
        return Polynomial(a - b)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Polynomial":
        return Polynomial(-self._rep)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = _unify(self._rep, other._rep)
        return Polynomial(a * b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        return Polynomial(self._rep ** exponent)

    def scale(self, factor: Scalar) -> "Polynomial":
        q = _qq(factor)
        ring = self._rep.ring
        if not q:
            return Polynomial(ring.zero)
        return Polynomial(ring.from_dict({monom: coeff * q for monom, coeff in self._rep.items()}))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """정확한 나눗셈. 나머지가 0이 아니면 InexactDivisionError."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        a, b = _unify(self._rep, divisor._rep)
        quotients, remainder = a.div([b])
        if remainder:
            raise InexactDivisionError(f"{divisor} does not divide {self}")
        return Polynomial(quotients[0])

    def _widened(self, *names: str) -> PolyElement:
        current = _ring_names(self._rep.ring)
        if all(name in current for name in names):
            return self._rep
        return _lift(self._rep, _ring(_canonical(set(current) | set(names))))

    def swap(self, x: str, y: str) -> "Polynomial":
        """두 변수 x, y 를 맞바꿉니다 (지수 교환만 하므로 compose 보다 빠름)."""
        rep = self._widened(x, y)
        ring = rep.ring
        names = _ring_names(ring)
        px, py = names.index(x), names.index(y)
        swapped = {}
        for monom, coeff in rep.items():
            exps = list(monom)
            exps[px], exps[py] = exps[py], exps[px]
            swapped[tuple(exps)] = coeff
        return Polynomial(ring.from_dict(swapped))

    def divide_linear(self, x: str, y: str, sign: int) -> "Polynomial":
        """x + sign·y 로 정확히 나눕니다 (x 의 지수별 조립제법).

        Raises:
            InexactDivisionError: 나머지가 0 이 아님
        """
        rep = self._widened(x, y)
        ring = rep.ring
        names = _ring_names(ring)
        px, py = names.index(x), names.index(y)
        levels: Dict[int, Dict[Tuple[int, ...], object]] = {}
        for monom, coeff in rep.items():
            levels.setdefault(monom[px], {})[monom] = coeff
        quotient = {}
        for a in range(max(levels, default=0), 0, -1):
            lower = levels.setdefault(a - 1, {})
            for monom, coeff in levels.get(a, {}).items():
                if not coeff:
                    continue
                exps = list(monom)
                exps[px] -= 1
                quotient[tuple(exps)] = coeff
                exps[py] += 1
                shifted = tuple(exps)
                lower[shifted] = lower.get(shifted, ring.domain.zero) - coeff * sign
        if any(levels.get(0, {}).values()):
            raise InexactDivisionError(f"{x} {'+' if sign > 0 else '-'} {y} does not divide {self}")
        return Polynomial(ring.from_dict(quotient))

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """변수들을 동시에 다항식으로 치환합니다."""
        present = set(self.variables())
        active = {name: image for name, image in images.items() if name in present}
        if not active:
            return self
        parts = _unify(self._rep, *(image._rep for image in active.values()))
        rep, image_reps = parts[0], parts[1:]
        ring = rep.ring
        names = _ring_names(ring)
        pairs = [
            (ring.gens[names.index(name)], image_rep)
            for name, image_rep in zip(active, image_reps)
        ]
        return Polynomial(rep.compose(pairs))

    # ============================================================
    # 비교
    # ============================================================

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _unify(self._rep, other._rep)
        return a == b

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._rep)

    @property
    def is_zero(self) -> bool:
        return not self._rep

    # ============================================================
    # 항 단위 조회
    # ============================================================

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """(단항식, 계수) 쌍을 순회합니다. 순서는 보장되지 않습니다."""
        names = _ring_names(self._rep.ring)
        for monom, coeff in self._rep.items():
            key = tuple((names[i], exp) for i, exp in enumerate(monom) if exp)
            yield key, _to_fraction(coeff)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """정준 순서: 차수 내림차순, 같은 차수는 (b̃_k, b_1, ..., t_1, ...) 사전식 내림차순."""
        names = self.variables()

        def key(term):
            monomial, _ = term
            exps = dict(monomial)
            return monomial_degree(monomial), tuple(exps.get(name, 0) for name in names)

        return sorted(self.terms(), key=key, reverse=True)

    def variables(self) -> List[str]:
        names = _ring_names(self._rep.ring)
        used = set()
        for monom in self._rep.keys():
            used.update(i for i, exp in enumerate(monom) if exp)
        return sorted((names[i] for i in used), key=variable_sort_key)

    def degree(self) -> Optional[int]:
        """가중 차수의 최댓값. 영다항식이면 None."""
        degrees = [monomial_degree(monomial) for monomial, _ in self.terms()]
        return max(degrees) if degrees else None

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(monomial) for monomial, _ in self.terms()}) <= 1

    def is_integral(self) -> bool:
        return all(coeff.denominator == 1 for _, coeff in self.terms())

    def constant_term(self) -> Fraction:
        for monomial, coeff in self.terms():
            if not monomial:
                return coeff
        return Fraction(0)

    # ============================================================
    # 변환
    # ============================================================

    def filter_terms(self, predicate) -> "Polynomial":
        return Polynomial.from_terms((m, c) for m, c in self.terms() if predicate(m))

    def at_zero_t(self) -> "Polynomial":
        """모든 t_i에 0을 대입."""
        return self.filter_terms(lambda monomial: not any(name.startswith("t") for name, _ in monomial))

    def negate_t(self) -> "Polynomial":
        """t_i -> -t_i."""
        return Polynomial.from_terms(
            (m, c if sum(e for name, e in m if name.startswith("t")) % 2 == 0 else -c)
            for m, c in self.terms()
        )

    def __repr__(self) -> str:
        from .serialization import to_text

        return f"Polynomial({to_text(self)!r})"

    def __str__(self) -> str:
        from .serialization import to_text

        return to_text(self)


def monomial_degree(monomial: Monomial) -> int:
    return sum(exp * variable_degree(name) for name, exp in monomial)


def as_polynomial(value: Union[Polynomial, Scalar]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)
