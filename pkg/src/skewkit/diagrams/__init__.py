"""
斜图基础模块
作者: XYZ-Algorithm-Team
用途: 分拆、斜图、带状图与连通斜图枚举
"""

from .partition import Partition, as_partition, partitions
from .skew import (
    EMPTY,
    Ribbon,
    SkewDiagram,
    contents,
    is_connected,
    is_ribbon,
    make_skew,
    nw_body,
    nw_ribbon,
    rotate180,
    se_ribbon,
    straight,
    transpose,
    up_body_size,
)
from .enumeration import corner_subdiagrams, enumerate_by_span, enumerate_connected

__all__ = [
    "Partition", "as_partition", "partitions",
    "SkewDiagram", "Ribbon", "EMPTY", "make_skew", "straight",
    "is_connected", "is_ribbon", "transpose", "rotate180",
    "nw_ribbon", "se_ribbon", "nw_body", "up_body_size", "contents",
    "enumerate_connected", "enumerate_by_span", "corner_subdiagrams",
]
