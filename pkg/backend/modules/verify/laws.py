"""W̃_∞ 작용 법칙과 기본 부호 합 항등식.

무작위 다항식은 numpy Generator 로 만들며, 같은 시드는 같은 표본을 줍니다.
"""

import itertools
import logging
from typing import List, Tuple

import numpy as np

from ..polyring import Polynomial, divided_difference, weyl_action
from ..polyring.variables import b_name, bt_name, t_name, variable_degree
from ..quotient import RewriteSystem, eq_mod_ideal, normal_form
from .identities import Tally
from .schemas import CheckResult

logger = logging.getLogger(__name__)

# 법칙 검사에 쓰는 단순 반사 첨자 범위
_MAX_REFLECTION = 3


def _variable_pool(k: int, degree: int) -> List[str]:
    names = [b_name(p) for p in range(1, degree + 1)] + [bt_name(k)]
    names += [t_name(i) for i in range(1, _MAX_REFLECTION + 2)]
    return [name for name in names if variable_degree(name) <= degree]


def random_polynomial(rng: np.random.Generator, k: int, degree: int, max_terms: int = 4) -> Polynomial:
    """가중 차수 <= degree, 정수 계수 [-3, 3] 의 무작위 다항식."""
    pool = _variable_pool(k, degree)
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        budget = int(rng.integers(0, degree + 1))
        exps = {}
        for index in rng.permutation(len(pool)):
            name = pool[int(index)]
            weight = variable_degree(name)
            if weight > budget:
                continue
            exp = int(rng.integers(0, budget // weight + 1))
            if exp:
                exps[name] = exp
                budget -= exp * weight
        coeff = int(rng.integers(-3, 4))
        if coeff:
            terms.append((exps, coeff))
    return Polynomial.from_terms(terms)


def _braid_words() -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    relations = [((0, 2, 0), (2, 0, 2)), ((0, 1), (1, 0))]
    for i in range(1, _MAX_REFLECTION):
        relations.append(((i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(0, _MAX_REFLECTION + 1):
        for j in range(i + 2, _MAX_REFLECTION + 1):
            if (i, j) != (0, 2):
                relations.append(((i, j), (j, i)))
    return relations


def _apply_word(word: Tuple[int, ...], f: Polynomial, k: int) -> Polynomial:
    for i in reversed(word):
        f = weyl_action(i, f, k)
    return f


def law_checks(k: int, samples: int, degree: int, seed: int) -> List[CheckResult]:
    """s_i^2 = 1, 브레이드 관계, ∂_i^2 = 0, Leibniz, 차수 감소."""
    rng = np.random.default_rng([seed, k])
    involution = Tally(f"involution k={k}", suite="laws")
    braid = Tally(f"braid k={k}", suite="laws")
    nilpotent = Tally(f"d_squared k={k}", suite="laws")
    leibniz = Tally(f"leibniz k={k}", suite="laws")
    grading = Tally(f"grading k={k}", suite="laws")
    relations = _braid_words()
    for sample in range(samples):
        f = random_polynomial(rng, k, degree)
        g = random_polynomial(rng, k, max(degree // 2, 1))
        for i in range(0, _MAX_REFLECTION + 1):
            label = f"sample={sample} i={i}"
            involution.equal(weyl_action(i, weyl_action(i, f, k), k), f, label)
            df = divided_difference(i, f, k)
            nilpotent.check(divided_difference(i, df, k).is_zero, label)
            leibniz.equal(
                divided_difference(i, f * g, k),
                df * g + weyl_action(i, f, k) * divided_difference(i, g, k),
                label,
            )
            if f.is_homogeneous() and not df.is_zero:
                grading.check(df.is_homogeneous() and df.degree() == f.degree() - 1, label)
        for left, right in relations:
            braid.equal(_apply_word(left, f, k), _apply_word(right, f, k), f"sample={sample} {left}={right}")
    return [involution.result(), braid.result(), nilpotent.result(), leibniz.result(), grading.result()]


def ideal_stability_checks(k: int, max_p: int) -> CheckResult:
    """s_i(J^(k)) ⊂ J^(k): 생성원의 상이 정규형 0."""
    tally = Tally(f"ideal_stable k={k}", suite="laws")
    system = RewriteSystem(k)
    for index, generator in enumerate(system.generators(max_p)):
        for i in range(0, _MAX_REFLECTION + 1):
            image = weyl_action(i, generator, k)
            tally.check(normal_form(image, k).is_zero, f"generator={index} i={i}")
    return tally.result()


def descends_checks(k: int, max_p: int, samples: int = 4, seed: int = 0) -> CheckResult:
    """∂_i(J^(k)) ⊂ J^(k): 생성원의 ∂_i 상과 f, f + g·h 쌍의 ∂_i 상이 법 J^(k) 로 같음."""
    tally = Tally(f"descends k={k}", suite="laws")
    rng = np.random.default_rng([seed, k, max_p])
    generators = RewriteSystem(k).generators(max_p)
    for index, generator in enumerate(generators):
        for i in range(0, _MAX_REFLECTION + 1):
            image = divided_difference(i, generator, k)
            tally.check(normal_form(image, k).is_zero, f"generator={index} i={i}")
    for sample in range(samples):
        f = random_polynomial(rng, k, 4)
        h = random_polynomial(rng, k, 2)
        shifted = f + generators[int(rng.integers(len(generators)))] * h
        for i in range(0, _MAX_REFLECTION + 1):
            tally.check(
                eq_mod_ideal(divided_difference(i, shifted, k), divided_difference(i, f, k), k),
                f"sample={sample} i={i}",
            )
    return tally.result()


# ============================================================
# 부호 합 항등식
# ============================================================

def _nonzero(*parts) -> int:
    return sum(1 for part in itertools.chain(*parts) if part)


def elem_checks(max_s: int, max_weight: int) -> List[CheckResult]:
    """Σ_i (-1)^i 2^{#(s-i,i)} = δ_{s,0} 와 합성 ρ 위의 곱 형태."""
    single = Tally("sign_sum", suite="elem")
    for s in range(0, max_s + 1):
        total = sum((-1) ** i * 2 ** _nonzero((s - i,), (i,)) for i in range(0, s + 1))
        single.check(total == (1 if s == 0 else 0), f"s={s}")
    product = Tally("sign_sum_compositions", suite="elem")
    for weight in range(0, max_weight + 1):
        for length in range(1, weight + 2):
            for rho in _compositions(weight, length):
                total = 0
                for alpha in itertools.product(*(range(part + 1) for part in rho)):
                    rest = tuple(r - a for r, a in zip(rho, alpha))
                    total += (-1) ** sum(alpha) * 2 ** _nonzero(rest, alpha)
                product.check(total == (1 if weight == 0 else 0), f"rho={rho}")
    return [single.result(), product.result()]


def _compositions(weight: int, length: int):
    """길이 length, 합 weight 인 음이 아닌 정수 합성."""
    if length == 1:
        yield (weight,)
        return
    for first in range(weight + 1):
        for rest in _compositions(weight - first, length - 1):
            yield (first,) + rest
