"""검증 작업 실행기.

threads > 1 이면 ProcessPoolExecutor 에 작업을 나눠 asyncio 로 모으고,
아니면 현재 프로세스에서 순서대로 실행합니다. 보고서는 항상 (suite, name)
순으로 정렬되므로 병렬도와 무관하게 같은 바이트를 냅니다.

on_check 를 주면 작업이 끝나는 대로 그 작업의 검사 결과를 하나씩 넘깁니다
(완료 순서이므로 정렬되어 있지 않음).
"""

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from .schemas import CheckResult, RunConfig, VerifyReport
from .suites import Job, finalize, plan_jobs

logger = logging.getLogger(__name__)

CheckCallback = Callable[[CheckResult], None]


def _notify(chunk: Sequence[CheckResult], on_check: Optional[CheckCallback]) -> None:
    if on_check is None:
        return
    for check in chunk:
        on_check(check)


async def _gather(jobs: Sequence[Job], threads: int, on_check: Optional[CheckCallback]) -> List[CheckResult]:
    loop = asyncio.get_running_loop()
    chunks: Dict[int, List[CheckResult]] = {}

    async def run(index: int, job: Job) -> None:
        chunk = await loop.run_in_executor(pool, job)
        chunks[index] = chunk
        _notify(chunk, on_check)

    with ProcessPoolExecutor(max_workers=threads) as pool:
        await asyncio.gather(*(run(index, job) for index, job in enumerate(jobs)))
    return [check for index in range(len(jobs)) for check in chunks[index]]


def run_jobs(
    jobs: Sequence[Job], threads: int = 1, on_check: Optional[CheckCallback] = None
) -> List[CheckResult]:
    """작업 목록을 실행하고 결과를 작업 순서대로 이어 붙입니다."""
    if threads > 1 and len(jobs) > 1:
        return asyncio.run(_gather(jobs, threads, on_check))
    results: List[CheckResult] = []
    for job in jobs:
        chunk = job()
        _notify(chunk, on_check)
        results.extend(chunk)
    return results


def run_suites(cfg: RunConfig, on_check: Optional[CheckCallback] = None) -> VerifyReport:
    """RunConfig 가 고른 스위트를 실행합니다.

    Args:
        cfg: 실행 설정 (suite, k, n, threads, seed ...)
        on_check: 검사 결과가 나올 때마다 부를 함수 (전체 결과에서 판정하는 검사 포함)

    Returns:
        VerifyReport: 정렬된 검사 결과
    """
    start = time.perf_counter()
    jobs = plan_jobs(cfg)
    logger.info(f"[Verify] 스위트={cfg.suite}, 작업 {len(jobs)}개, 프로세스 {cfg.threads}")
    results = run_jobs(jobs, cfg.threads, on_check)
    checks = finalize(results)
    _notify(checks[len(results):], on_check)
    report = VerifyReport(checks=checks).sorted()
    elapsed = time.perf_counter() - start
    logger.info(f"[Verify] 완료: {report.passed}/{len(report.checks)} 통과 ({elapsed:.1f}s)")
    return report
