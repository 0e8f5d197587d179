"""Verify 모듈 설정.

검증 스위트의 병렬도와 무작위 표본 설정값.
"""

import os
import logging
from pathlib import Path
from dataclasses import dataclass, field

# 환경변수 로드 (상위에서 이미 로드됨)
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

_env_path = Path(__file__).parent.parent.parent / "config" / ".env"
load_dotenv(_env_path)


# ============================================================
# 검증 실행 설정
# ============================================================

@dataclass
class VerifyConfig:
    """검증 스위트 실행 설정."""

    # 작업 프로세스 수 (1 이면 현재 프로세스에서 실행)
    THREADS: int = field(
        default_factory=lambda: int(os.getenv("ETA_THREADS", "1"))
    )

    # 무작위 검사 시드
    SEED: int = field(
        default_factory=lambda: int(os.getenv("ETA_SEED", "7"))
    )

    # 법칙당 무작위 다항식 수
    SAMPLES: int = field(
        default_factory=lambda: int(os.getenv("ETA_SAMPLES", "200"))
    )

    # 무작위 다항식 최대 차수
    RANDOM_DEGREE: int = field(
        default_factory=lambda: int(os.getenv("ETA_RANDOM_DEGREE", "6"))
    )


# ============================================================
# 싱글톤 인스턴스
# ============================================================

verify_config = VerifyConfig()


# ============================================================
# 설정 로드 확인 로그
# ============================================================

logger.info(f"[Verify] 설정 로드: .env={_env_path} (존재: {_env_path.exists()})")
logger.info(
    f"[Verify] 프로세스: {verify_config.THREADS}, 시드: {verify_config.SEED}, "
    f"표본: {verify_config.SAMPLES}, 최대 차수: {verify_config.RANDOM_DEGREE}"
)
