"""공통 예외 정의.

모든 모듈이 공유하는 예외 계층입니다. CLI는 EtaError 계열을 잡아
종료 코드 2로 처리하고, 나머지는 내부 버그로 간주합니다.
"""

from typing import Optional


class EtaError(Exception):
    """패키지 전체의 기본 예외."""


class PartitionError(EtaError, ValueError):
    """k-strict 조건이나 타입 규칙을 위반한 분할."""


class PermutationError(EtaError, ValueError):
    """부호 순열 조건(또는 k-Grassmannian 조건)을 위반한 입력."""


class ParseError(EtaError, ValueError):
    """텍스트 입력 파싱 실패.

    Attributes:
        text: 원본 입력 문자열
        position: 문제가 발견된 0-기반 문자 위치
    """

    def __init__(self, message: str, text: str, position: Optional[int] = None):
        self.text = text
        self.position = position
        where = f" (position {position})" if position is not None else ""
        super().__init__(f"{message}{where}: {text!r}")


class InexactDivisionError(EtaError, ArithmeticError):
    """분할 차분의 분자가 선형식으로 나누어떨어지지 않음 (내부 일관성 오류)."""


class IntegralityError(EtaError, ArithmeticError):
    """Z[b,t]에 있어야 할 다항식이 정수 계수가 아님."""


class RankDefectError(EtaError, ArithmeticError):
    """기저 전개 후 잔여항이 남음."""


class CoverClassificationError(EtaError, RuntimeError):
    """덮개 관계가 a–g 어느 경우에도 들지 않음 (내부 일관성 오류)."""


__all__ = [
    "EtaError",
    "PartitionError",
    "PermutationError",
    "ParseError",
    "InexactDivisionError",
    "IntegralityError",
    "RankDefectError",
    "CoverClassificationError",
]
