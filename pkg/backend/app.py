"""Double eta 다항식 명령행 도구 (eta).

D형 짝수 직교 Grassmannian 의 double eta 다항식 H_λ(c|t), Ĥ_λ(c|t) 를
계산하고, 몫 환 B^(k)[t] 의 정규형과 기저 전개, type A Schubert 다항식,
검증 스위트를 제공합니다.

주요 명령:
    compute: H_λ / Ĥ_λ / H_λ(c) / H'_λ
    normal-form: J^(k) 법 정규형
    basis-expand: b_λ 또는 H_λ 기저 전개
    schubert: S_u(t)
    verify: 검증 스위트 실행
    enumerate: 직사각형 안의 타입 분할과 w_λ, β(λ)

종료 코드:
    0: 성공, 1: 검증 실패, 2: 사용법 / 입력 오류

표준 출력은 결과만 담으며, 로그는 표준 에러(와 선택적 파일)로 갑니다.
"""

import argparse
import glob
import logging
import os
import sys
from datetime import datetime, timedelta
from pathlib import Path
from typing import List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

# 환경변수 로드 (config/.env)
load_dotenv(Path(__file__).parent / "config" / ".env")

from modules.errors import CoverClassificationError, EtaError  # noqa: E402
from modules.eta import double_eta, double_eta_dual, double_eta_hat, single_eta  # noqa: E402
from modules.polyring import Polynomial, from_json, render  # noqa: E402
from modules.quotient import (  # noqa: E402
    expand_in_b_basis,
    expand_in_eta_basis,
    expansion_entries,
    normal_form,
)
from modules.schubert import Permutation, schubert_poly  # noqa: E402
from modules.verify import (  # noqa: E402
    SUITES,
    CheckResult,
    EnumeratedPartition,
    RunConfig,
    run_suites,
    verify_config,
)
from modules.weyl import (  # noqa: E402
    TypedPartition,
    beta,
    enumerate_typed,
    parse_shape,
    parse_typed,
    partition_to_perm,
)

logger = logging.getLogger("eta")

# 검증 스위트 별칭
SUITE_ALIASES = {"hat-sum": "hat"}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ============================================================
# 로깅
# ============================================================

def cleanup_old_logs(log_dir: str, retention_days: int) -> int:
    """오래된 eta_YYYYMMDD.log 파일을 삭제합니다.

    Returns:
        삭제된 파일 수
    """
    if not os.path.isdir(log_dir):
        return 0
    cutoff = datetime.now() - timedelta(days=retention_days)
    deleted = 0
    for log_file in glob.glob(os.path.join(log_dir, "eta_*.log")):
        try:
            stamp = os.path.basename(log_file)[len("eta_"):-len(".log")]
            if datetime.strptime(stamp, "%Y%m%d") < cutoff:
                os.remove(log_file)
                deleted += 1
        except (ValueError, OSError):
            continue
    return deleted


def setup_logging() -> None:
    """LOG_LEVEL (기본 WARNING) 로 표준 에러에 로그를 냅니다.

    ETA_LOG_DIR 이 있으면 날짜별 파일에도 기록하고 보관 기간이 지난 파일은 지웁니다.
    """
    level = os.getenv("LOG_LEVEL", "WARNING").upper()
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_dir = os.getenv("ETA_LOG_DIR")
    deleted = 0
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        deleted = cleanup_old_logs(log_dir, int(os.getenv("ETA_LOG_RETENTION_DAYS", "30")))
        log_filename = os.path.join(log_dir, f"eta_{datetime.now().strftime('%Y%m%d')}.log")
        handlers.append(logging.FileHandler(log_filename, encoding="utf-8"))
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )
    logger.info(f"[CLI] 로깅 초기화 완료: level={level}, log_dir={log_dir}, 정리된 파일={deleted}")


# ============================================================
# 명령
# ============================================================

def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _stream_check(check: CheckResult) -> None:
    sys.stdout.write(check.to_line() + "\n")
    sys.stdout.flush()


def _input_polynomial(args: argparse.Namespace) -> Polynomial:
    """--lambda 의 H_λ 또는 --json (\"-\" 이면 표준 입력) 다항식."""
    if args.json is not None:
        text = sys.stdin.read() if args.json == "-" else args.json
        return from_json(text)
    return double_eta(parse_typed(args.partition, args.k))


def cmd_compute(args: argparse.Namespace) -> int:
    if args.hat:
        poly = double_eta_hat(parse_shape(args.partition, args.k))
    else:
        lam = parse_typed(args.partition, args.k)
        if args.single:
            poly = single_eta(lam)
        elif args.dual:
            poly = double_eta_dual(lam)
        else:
            poly = double_eta(lam)
    _emit(render(poly, args.format))
    return EXIT_OK


def cmd_normal_form(args: argparse.Namespace) -> int:
    _emit(render(normal_form(_input_polynomial(args), args.k), args.format))
    return EXIT_OK


def cmd_basis_expand(args: argparse.Namespace) -> int:
    poly = _input_polynomial(args)
    expansion = expand_in_eta_basis(poly, args.k) if args.basis == "eta" else expand_in_b_basis(poly, args.k)
    if args.format == "json":
        _emit("[" + ",".join(entry.model_dump_json() for entry in expansion_entries(expansion)) + "]")
        return EXIT_OK
    symbol = "H" if args.basis == "eta" else "b"
    lines = []
    for lam in sorted(expansion, key=TypedPartition.sort_key):
        coeff = render(expansion[lam], args.format)
        if args.format == "latex":
            lines.append(f"({coeff})\\,{symbol}_{{{lam}}}")
        else:
            lines.append(f"({coeff}) {symbol}[{lam}]")
    _emit("\n".join(lines) if lines else "0")
    return EXIT_OK


def cmd_schubert(args: argparse.Namespace) -> int:
    _emit(render(schubert_poly(Permutation.parse(args.perm)), args.format))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    rows = [
        EnumeratedPartition(partition=str(lam), permutation=str(partition_to_perm(lam)), beta=list(beta(lam)))
        for lam in enumerate_typed(args.k, args.rows, args.cols)
    ]
    if args.format == "json":
        _emit("[" + ",".join(row.model_dump_json() for row in rows) + "]")
    else:
        _emit("\n".join(f"{row.partition}\t{row.permutation}\t{tuple(row.beta)}" for row in rows))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = RunConfig(
        k=args.k,
        n=args.n,
        suite=SUITE_ALIASES.get(args.suite, args.suite),
        format="json" if args.format == "json" else "text",
        max_weight=args.max_weight,
        threads=args.threads,
        seed=args.seed,
        samples=args.samples,
    )
    if cfg.format == "json":
        report = run_suites(cfg)
        _emit(report.model_dump_json(indent=2))
    else:
        report = run_suites(cfg, on_check=_stream_check)
        _emit(report.summary())
    return EXIT_OK if report.ok else EXIT_FAILED


# ============================================================
# 인자 파서
# ============================================================

def _add_format(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument("--format", choices=("json", "latex", "text"), default=default, help="출력 형식")


def _add_polynomial_input(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--lambda", dest="partition", help='타입 분할, 예: "2,1:t2" (그 H_λ 를 입력으로)')
    source.add_argument("--json", help='JSON 다항식 ("-" 이면 표준 입력)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eta", description="Double eta polynomials for even orthogonal Grassmannians")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="H_λ(c|t) 계산")
    compute.add_argument("--k", type=int, required=True)
    compute.add_argument("--lambda", dest="partition", required=True, help='예: "2,1:t1", 빈 분할은 "-"')
    variant = compute.add_mutually_exclusive_group()
    variant.add_argument("--hat", action="store_true", help="Ĥ_λ(c|t) (타입 없는 분할)")
    variant.add_argument("--single", action="store_true", help="H_λ(c) = H_λ(c|0)")
    variant.add_argument("--dual", action="store_true", help="H'_λ (반대 타입)")
    _add_format(compute, default="json")
    compute.set_defaults(handler=cmd_compute)

    nf = sub.add_parser("normal-form", help="J^(k) 법 정규형")
    nf.add_argument("--k", type=int, required=True)
    _add_polynomial_input(nf)
    _add_format(nf)
    nf.set_defaults(handler=cmd_normal_form)

    expand = sub.add_parser("basis-expand", help="b_λ / H_λ 기저 전개")
    expand.add_argument("--k", type=int, required=True)
    expand.add_argument("--basis", choices=("b", "eta"), default="eta")
    _add_polynomial_input(expand)
    _add_format(expand)
    expand.set_defaults(handler=cmd_basis_expand)

    schubert = sub.add_parser("schubert", help="type A Schubert 다항식 S_u(t)")
    schubert.add_argument("--perm", required=True, help='예: "3,1,2"')
    _add_format(schubert)
    schubert.set_defaults(handler=cmd_schubert)

    verify = sub.add_parser("verify", help="검증 스위트 실행")
    verify.add_argument("suite", choices=SUITES + tuple(SUITE_ALIASES) + ("all",))
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--n", type=int, default=None)
    verify.add_argument("--max-weight", type=int, default=6)
    verify.add_argument("--seed", type=int, default=verify_config.SEED)
    verify.add_argument("--threads", type=int, default=verify_config.THREADS)
    verify.add_argument("--samples", type=int, default=verify_config.SAMPLES)
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.set_defaults(handler=cmd_verify)

    enum = sub.add_parser("enumerate", help="직사각형 안의 타입 k-strict 분할")
    enum.add_argument("--k", type=int, required=True)
    enum.add_argument("--rows", type=int, required=True)
    enum.add_argument("--cols", type=int, required=True)
    _add_format(enum)
    enum.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI 진입점.

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])

    Returns:
        int: 종료 코드 (0 성공, 1 검증 실패, 2 사용법 오류)
    """
    setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except ValidationError as e:
        logger.error(f"[CLI] 설정 오류: {e}")
        sys.stderr.write(f"eta: invalid configuration: {e}\n")
        return EXIT_USAGE
    except CoverClassificationError as e:
        logger.error(f"[CLI] 내부 일관성 오류: {e}")
        sys.stderr.write(f"eta: internal error: {e}\n")
        return EXIT_FAILED
    except EtaError as e:
        logger.error(f"[CLI] 입력 오류: {e}")
        sys.stderr.write(f"eta: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
