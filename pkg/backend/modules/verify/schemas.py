"""검증 실행 설정과 보고서 스키마."""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

SuiteName = Literal[
    "tables",
    "identities",
    "laws",
    "covers",
    "hat",
    "splitting",
    "basis",
    "reconstruct",
    "elem",
    "all",
]
OutputFormat = Literal["json", "latex", "text"]

SUITES = ("tables", "identities", "laws", "covers", "hat", "splitting", "basis", "reconstruct", "elem")


class VerifyBaseModel(BaseModel):
    """검증 스키마 기본 모델 (알 수 없는 필드 거부)."""

    model_config = ConfigDict(extra="forbid")


class RunConfig(VerifyBaseModel):
    """CLI 한 번의 실행 설정."""

    k: Optional[int] = Field(default=None, ge=1, description="k-strict 의 k (없으면 스위트 기본 범위)")
    n: Optional[int] = Field(default=None, ge=0, description="직사각형 (n-k) x (n+k-1) 의 n")
    rows: Optional[int] = Field(default=None, ge=0, description="열거 직사각형 행 수")
    cols: Optional[int] = Field(default=None, ge=0, description="열거 직사각형 열 수")
    partitions: List[str] = Field(default_factory=list, description='"2,1:t1" 형식의 분할들')
    format: OutputFormat = Field(default="text", description="출력 형식")
    suite: SuiteName = Field(default="all", description="검증 스위트")
    max_weight: int = Field(default=6, ge=0, description="분해 정리 검사의 최대 |λ|")
    threads: int = Field(default=1, ge=1, description="병렬 작업 프로세스 수")
    seed: int = Field(default=7, description="무작위 검사 시드")
    samples: int = Field(default=200, ge=0, description="법칙당 무작위 다항식 수")

    @model_validator(mode="after")
    def _check_rectangle(self) -> "RunConfig":
        if self.n is not None and self.k is not None and self.n < self.k:
            raise ValueError(f"n must be >= k (n={self.n}, k={self.k})")
        return self


class CheckResult(VerifyBaseModel):
    """검사 하나의 결과."""

    suite: str = Field(..., description="스위트 이름")
    name: str = Field(..., description="검사 이름")
    passed: bool = Field(..., description="통과 여부")
    detail: str = Field(default="", description="실패 원인 또는 부가 정보")
    ideal_required: bool = Field(default=False, description="J^(k) 몫이 있어야만 성립")

    def to_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        flag = " [ideal-required]" if self.ideal_required else ""
        detail = f"  {self.detail}" if self.detail else ""
        return f"{status} {self.suite}/{self.name}{flag}{detail}"


class VerifyReport(VerifyBaseModel):
    """스위트 실행 보고서."""

    checks: List[CheckResult] = Field(default_factory=list, description="(suite, name) 순 정렬")

    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def sorted(self) -> "VerifyReport":
        return VerifyReport(checks=sorted(self.checks, key=lambda c: (c.suite, c.name)))

    def summary(self) -> str:
        return f"{self.passed}/{len(self.checks)} passed"

    def to_text(self) -> str:
        return "\n".join([check.to_line() for check in self.checks] + [self.summary()])


class EnumeratedPartition(VerifyBaseModel):
    """enumerate 명령의 출력 한 줄."""

    partition: str = Field(..., description='"2,1:t1" 형식의 분할')
    permutation: str = Field(..., description="w_λ 의 창 표기")
    beta: List[int] = Field(default_factory=list, description="β(λ)")
