"""검증 스위트 정의와 작업 분할.

각 스위트는 λ(또는 차수, k) 단위의 작업 목록으로 나뉩니다. 작업은 모듈 최상위
함수의 functools.partial 이므로 프로세스 풀로 넘길 수 있습니다.
"""

import logging
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import CoverClassificationError
from ..eta import double_eta, double_eta_hat, eta_via_divided_differences, top_class
from ..polyring import Polynomial, divided_difference, divided_difference_01
from ..quotient import eq_mod_ideal, expand_in_b_basis, reduced_monomial_count, typed_partition_count
from ..schubert import splitting_rhs
from ..weyl import (
    CoverDatum,
    KStrictPartition,
    TypedPartition,
    covers,
    dominates,
    enumerate_typed,
    top_partition,
    typed_partitions_of,
)
from .config import verify_config
from .identities import Tally, identity_checks
from .laws import descends_checks, elem_checks, ideal_stability_checks, law_checks
from .schemas import SUITES, CheckResult, RunConfig
from .tables import double_eta_table, hat_table

logger = logging.getLogger(__name__)

Job = Callable[[], List[CheckResult]]

# 기본 검사 범위
_IDENTITY_MAX_P = 8
_IDENTITY_MAX_R = 6
_IDEAL_MAX_P = 6
_DESCENDS_SAMPLES = 8
_COVER_N = 5
_RECONSTRUCT_N = 4
_HAT_MAX_WEIGHT = 8
_BASIS_MAX_WEIGHT = 8
_COUNT_MAX_DEGREE = 10
_ELEM_MAX_S = 8
_ELEM_MAX_WEIGHT = 6

# J^(k) 없이는 성립하지 않는 덮개 (k=1 에서 반드시 관찰되어야 함)
_QUOTIENT_COVERS = (("d1", 1), ("g", 0))


def _rectangle(k: int, n: int) -> List[TypedPartition]:
    return enumerate_typed(k, n - k, n + k - 1)


def _shapes_of(k: int, d: int) -> List[KStrictPartition]:
    seen: Dict[Tuple[int, ...], KStrictPartition] = {}
    for lam in typed_partitions_of(k, d):
        seen.setdefault(lam.parts, lam.shape)
    return list(seen.values())


# ============================================================
# tables
# ============================================================

def table_checks() -> List[CheckResult]:
    """기준표의 H_λ(c|t), Ĥ_λ(c|t) 값을 정확히 재현하는지 확인합니다."""
    results = []
    for lam, build in double_eta_table():
        got = double_eta(lam)
        results.append(
            CheckResult(
                suite="tables",
                name=f"H k={lam.k} {lam}",
                passed=got == build(),
                detail="" if got == build() else f"got {got}",
            )
        )
    for shape, build in hat_table():
        got = double_eta_hat(shape)
        results.append(
            CheckResult(
                suite="tables",
                name=f"hat k={shape.k} {shape}",
                passed=got == build(),
                detail="" if got == build() else f"got {got}",
            )
        )
    return results


# ============================================================
# covers / reconstruct
# ============================================================

def _covers_or_failure(lam: TypedPartition, suite: str) -> Tuple[List[CoverDatum], List[CheckResult]]:
    """분류되지 않는 덮개는 예외 대신 실패한 검사 한 줄로 돌려줍니다."""
    try:
        return covers(lam), []
    except CoverClassificationError as e:
        logger.error(f"[Verify] {suite} k={lam.k} {lam}: {e}")
        return [], [CheckResult(suite=suite, name=f"k={lam.k} {lam} classify", passed=False, detail=str(e))]


def cover_checks(lam: TypedPartition) -> List[CheckResult]:
    """λ 의 모든 덮개 (i, μ) 에 대해 ∂_i H_λ ≡ H_μ (mod J^(k))."""
    k = lam.k
    found, results = _covers_or_failure(lam, "covers")
    if not found:
        return results
    h_lam = double_eta(lam)
    for cover in found:
        lhs = divided_difference(cover.i, h_lam, k)
        rhs = double_eta(cover.mu)
        exact = lhs == rhs
        passed = exact or eq_mod_ideal(lhs, rhs, k)
        results.append(
            CheckResult(
                suite="covers",
                name=f"k={k} {lam} -> {cover.mu} s{cover.i} ({cover.case})",
                passed=passed,
                ideal_required=passed and not exact,
            )
        )
        logger.info(f"[Verify] covers k={k} {lam} s{cover.i}: {'PASS' if passed else 'FAIL'}")
    return results


def quotient_cover_witnesses(results: Sequence[CheckResult]) -> List[CheckResult]:
    """k=1 에서 (d1, i=1), (g, i=0) 덮개가 몫에서만 성립하는 사례가 있는지."""
    k1 = [check for check in results if check.suite == "covers" and check.name.startswith("k=1 ")]
    if not k1:
        return []
    witnesses = []
    for case, i in _QUOTIENT_COVERS:
        marker = f" s{i} ({case})"
        hits = [check.name for check in k1 if check.name.endswith(marker) and check.ideal_required]
        witnesses.append(
            CheckResult(
                suite="covers",
                name=f"quotient-only k=1 ({case}, i={i})",
                passed=bool(hits),
                detail=hits[0] if hits else "no ideal-required cover found",
            )
        )
    return witnesses


def reconstruct_checks(lam: TypedPartition, n: int) -> List[CheckResult]:
    """∂_{a_1} ⋯ ∂_{a_r} H_{λ_0} ≡ H_λ (mod J^(k))."""
    k = lam.k
    got = eta_via_divided_differences(lam, k, n)
    passed = eq_mod_ideal(got, double_eta(lam), k)
    return [CheckResult(suite="reconstruct", name=f"k={k} n={n} {lam}", passed=passed)]


def top_class_checks(k: int, n: int) -> List[CheckResult]:
    """직접 평가한 최상위 클래스와 H_{λ_0} 비교."""
    lam0 = top_partition(k, n)
    passed = top_class(k, n) == double_eta(lam0)
    return [CheckResult(suite="reconstruct", name=f"top k={k} n={n} {lam0}", passed=passed)]


# ============================================================
# hat
# ============================================================

def _hat_claim(
    lam: TypedPartition, mu: TypedPartition, i: int, h_lam: Polynomial, h_mu: Polynomial
) -> Optional[Tuple[str, bool]]:
    k = lam.k
    if lam.type == 0 and mu.type == 0:
        return "(i)", i >= 2 and divided_difference(i, h_lam, k) == h_mu
    if lam.type == 0:
        return "(ii)", i in (0, 1) and divided_difference_01(h_lam, k) == h_mu
    if mu.type == 0:
        return "(iii)", (
            i in (0, 1)
            and divided_difference(0, h_lam, k) == h_mu
            and divided_difference(1, h_lam, k) == h_mu
        )
    if lam.type != mu.type:
        return None
    if i >= 2:
        return "(iv)", divided_difference(i, h_lam, k) == h_mu
    return "(iv)", divided_difference_01(h_lam, k) == h_mu


def hat_cover_checks(shape: KStrictPartition) -> List[CheckResult]:
    """모양 λ 의 모든 타입 선택에서 나오는 덮개에 대해 Ĥ 의 정확한 분할 차분 공식."""
    k = shape.k
    h_lam = double_eta_hat(shape)
    found: Dict[str, CheckResult] = {}
    for lam in shape.lifts():
        lam_covers, failures = _covers_or_failure(lam, "hat")
        for failure in failures:
            found.setdefault(failure.name, failure)
        for cover in lam_covers:
            claim = _hat_claim(lam, cover.mu, cover.i, h_lam, double_eta_hat(cover.mu.shape))
            if claim is None:
                continue
            label, passed = claim
            name = f"k={k} {shape} -> {cover.mu.shape} s{cover.i} {label}"
            found.setdefault(name, CheckResult(suite="hat", name=name, passed=passed))
    return list(found.values())


def hat_sum_checks(k: int, d: int) -> List[CheckResult]:
    """Ĥ_λ = Σ_{타입} H_λ (어떤 부분이 k 이면 H + H', 아니면 H)."""
    results = []
    for shape in _shapes_of(k, d):
        total = Polynomial.zero()
        for lam in shape.lifts():
            total = total + double_eta(lam)
        results.append(
            CheckResult(suite="hat", name=f"sum k={k} {shape}", passed=double_eta_hat(shape) == total)
        )
    return results


# ============================================================
# basis
# ============================================================

def _triangular_failure(lam: TypedPartition, expansion: Dict[TypedPartition, Polynomial]) -> str:
    if expansion.get(lam) != Polynomial.one():
        return f"coefficient of b_{lam} is {expansion.get(lam)}"
    for mu, coeff in expansion.items():
        if mu == lam or coeff.is_zero:
            continue
        smaller = mu.size < lam.size
        higher = mu.size == lam.size and mu.parts != lam.parts and dominates(mu.parts, lam.parts)
        if not (smaller or higher):
            return f"unexpected b_{mu}"
        if any(not name.startswith("t") for name in coeff.variables()):
            return f"coefficient of b_{mu} is not in Z[t]"
        if not coeff.is_integral() or not coeff.is_homogeneous() or coeff.degree() != lam.size - mu.size:
            return f"coefficient of b_{mu} has wrong shape"
    return ""


def basis_checks(k: int, d: int) -> List[CheckResult]:
    """H_λ(c|t) 의 b_λ 전개가 단위 삼각인지 확인합니다."""
    results = []
    for lam in typed_partitions_of(k, d):
        failure = _triangular_failure(lam, expand_in_b_basis(double_eta(lam), k))
        results.append(CheckResult(suite="basis", name=f"k={k} {lam}", passed=not failure, detail=failure))
    return results


def dimension_checks(k: int, max_d: int) -> List[CheckResult]:
    """차수별 기약 단항식 수 = 타입 k-strict 분할 수."""
    tally = Tally(f"dimension k={k}", suite="basis")
    for d in range(0, max_d + 1):
        tally.check(reduced_monomial_count(k, d) == typed_partition_count(k, d), f"d={d}")
    return [tally.result()]


# ============================================================
# splitting
# ============================================================

def splitting_checks(lam: TypedPartition) -> List[CheckResult]:
    """H_λ(c|t) ≡ Σ H_μ(c) S_{u^{-1}}(-t) (mod J^(k))."""
    k = lam.k
    lhs = double_eta(lam)
    rhs = splitting_rhs(lam)
    exact = lhs == rhs
    passed = exact or eq_mod_ideal(lhs, rhs, k)
    return [
        CheckResult(
            suite="splitting",
            name=f"k={k} {lam}",
            passed=passed,
            ideal_required=passed and not exact,
        )
    ]


def splitting_witness(results: Sequence[CheckResult]) -> List[CheckResult]:
    """Z[b,t] 에서는 성립하지 않는 분해 사례가 하나 이상 있는지."""
    checks = [check for check in results if check.suite == "splitting"]
    if not checks:
        return []
    hits = [check.name for check in checks if check.ideal_required]
    return [
        CheckResult(
            suite="splitting",
            name="quotient-only witness",
            passed=bool(hits),
            detail=hits[0] if hits else "every instance held in Z[b,t]",
        )
    ]


# ============================================================
# 작업 계획
# ============================================================

def _ks(cfg: RunConfig, default: Iterable[int]) -> List[int]:
    return [cfg.k] if cfg.k is not None else list(default)


def _suite_jobs(suite: str, cfg: RunConfig) -> List[Job]:
    jobs: List[Job] = []
    if suite == "tables":
        jobs.append(table_checks)
    elif suite == "identities":
        for k in _ks(cfg, (1, 2, 3)):
            jobs.append(partial(identity_checks, k, _IDENTITY_MAX_P, _IDENTITY_MAX_R))
    elif suite == "laws":
        for k in _ks(cfg, (1, 2, 3)):
            jobs.append(partial(law_checks, k, cfg.samples, verify_config.RANDOM_DEGREE, cfg.seed))
            jobs.append(partial(_single, ideal_stability_checks, k, _IDEAL_MAX_P))
            jobs.append(partial(_single, descends_checks, k, _IDEAL_MAX_P, _DESCENDS_SAMPLES, cfg.seed))
    elif suite == "covers":
        for k in _ks(cfg, (1, 2)):
            for lam in _rectangle(k, cfg.n or max(_COVER_N, k)):
                jobs.append(partial(cover_checks, lam))
    elif suite == "hat":
        for k in _ks(cfg, (1, 2)):
            shapes = {lam.parts: lam.shape for lam in _rectangle(k, cfg.n or max(_COVER_N, k))}
            jobs.extend(partial(hat_cover_checks, shape) for shape in shapes.values())
            jobs.extend(partial(hat_sum_checks, k, d) for d in range(0, _HAT_MAX_WEIGHT + 1))
    elif suite == "basis":
        for k in _ks(cfg, (1, 2)):
            jobs.extend(partial(basis_checks, k, d) for d in range(0, _BASIS_MAX_WEIGHT + 1))
        for k in _ks(cfg, (1, 2, 3)):
            jobs.append(partial(dimension_checks, k, _COUNT_MAX_DEGREE))
    elif suite == "reconstruct":
        k = cfg.k or 1
        n = cfg.n or max(_RECONSTRUCT_N, k)
        jobs.append(partial(top_class_checks, k, n))
        jobs.extend(partial(reconstruct_checks, lam, n) for lam in _rectangle(k, n))
    elif suite == "splitting":
        for k in _ks(cfg, (1, 2)):
            for d in range(0, cfg.max_weight + 1):
                jobs.extend(partial(splitting_checks, lam) for lam in typed_partitions_of(k, d))
    elif suite == "elem":
        jobs.append(partial(elem_checks, _ELEM_MAX_S, _ELEM_MAX_WEIGHT))
    else:
        raise ValueError(f"Unknown suite: {suite}")
    return jobs


def _single(fn: Callable[..., CheckResult], *args) -> List[CheckResult]:
    return [fn(*args)]


def plan_jobs(cfg: RunConfig) -> List[Job]:
    """RunConfig 의 스위트를 작업 목록으로 펼칩니다."""
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    jobs: List[Job] = []
    for suite in suites:
        suite_jobs = _suite_jobs(suite, cfg)
        logger.info(f"[Verify] {suite}: 작업 {len(suite_jobs)}개")
        jobs.extend(suite_jobs)
    return jobs


def finalize(results: Sequence[CheckResult]) -> List[CheckResult]:
    """전체 결과에서만 판정할 수 있는 검사를 덧붙입니다."""
    return list(results) + quotient_cover_witnesses(results) + splitting_witness(results)
