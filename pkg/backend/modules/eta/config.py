"""Eta 모듈 설정.

H_λ / Ĥ_λ 계산과 분할 차분 재구성에 쓰이는 설정값.
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


def _parse_bool(value: str, default: bool = True) -> bool:
    """문자열을 bool로 변환."""
    if value is None:
        return default
    return value.lower() in ("true", "1", "yes", "on")


# ============================================================
# 계산 설정
# ============================================================

@dataclass
class EtaConfig:
    """Eta 다항식 계산 설정."""

    # H, Ĥ, b_λ 가 Z[b,t] 에 속하는지 검사
    CHECK_INTEGRALITY: bool = field(
        default_factory=lambda: _parse_bool(
            os.getenv("ETA_CHECK_INTEGRALITY"), default=True
        )
    )

    # 분할 차분 재구성의 매 단계마다 J^(k) 정규형 적용
    REDUCE_STEPS: bool = field(
        default_factory=lambda: _parse_bool(
            os.getenv("ETA_REDUCE_STEPS"), default=True
        )
    )

    # H, Ĥ, Schubert 다항식 메모 크기
    CACHE_SIZE: int = field(
        default_factory=lambda: int(os.getenv("ETA_CACHE_SIZE", "4096"))
    )


# ============================================================
# 싱글톤 인스턴스
# ============================================================

eta_config = EtaConfig()


# ============================================================
# 설정 로드 확인 로그
# ============================================================

logger.info(f"[Eta] 설정 로드: .env={_env_path} (존재: {_env_path.exists()})")
logger.info(
    f"[Eta] 정수성 검사: {eta_config.CHECK_INTEGRALITY}, "
    f"단계별 정규형: {eta_config.REDUCE_STEPS}, 캐시: {eta_config.CACHE_SIZE}"
)
