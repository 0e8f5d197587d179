"""Z[b,t]의 변수 이름 규칙.

변수는 세 종류입니다.

- ``b<p>``  (p >= 1): 차수 p
- ``bt<k>``: b̃_k, 차수 k (모듈 수준의 k 하나에만 존재)
- ``t<i>``  (i >= 1): 차수 1

정렬 순서는 (b̃_k, b_1, b_2, ..., t_1, t_2, ...) 입니다.
"""

import re
from typing import Tuple

_VARIABLE_RE = re.compile(r"^(bt|b|t)([1-9][0-9]*)$")

# 종류별 정렬 우선순위
_KIND_RANK = {"bt": 0, "b": 1, "t": 2}


def parse_variable(name: str) -> Tuple[str, int]:
    """변수 이름을 (종류, 첨자)로 분해합니다.

    Raises:
        ValueError: 알 수 없는 변수 이름
    """
    match = _VARIABLE_RE.match(name)
    if match is None:
        raise ValueError(f"Unknown variable name: {name!r}")
    return match.group(1), int(match.group(2))


def variable_degree(name: str) -> int:
    """변수의 차수. t_i는 1, b_p는 p, b̃_k는 k."""
    kind, index = parse_variable(name)
    return 1 if kind == "t" else index


def variable_sort_key(name: str) -> Tuple[int, int]:
    kind, index = parse_variable(name)
    return _KIND_RANK[kind], index


def is_t_variable(name: str) -> bool:
    return name.startswith("t")


def b_name(p: int) -> str:
    return f"b{p}"


def bt_name(k: int) -> str:
    return f"bt{k}"


def t_name(i: int) -> str:
    return f"t{i}"
