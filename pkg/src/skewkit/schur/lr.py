"""
Littlewood-Richardson 计算引擎
作者: XYZ-Algorithm-Team
用途: 原生回溯枚举 LR 斜表（列严格 + 格路词剪枝），可选 lrcalc 编译后端
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..diagrams.partition import Partition, as_partition

logger = logging.getLogger(__name__)

Expansion = Dict[Partition, int]


def _reading_cells(outer: Partition, inner: Partition) -> List[Tuple[int, int]]:
    """行自上而下、行内自右向左的读取顺序"""
    return [(i, j) for i in range(len(outer))
            for j in range(outer[i] - 1, inner.part(i) - 1, -1)]


def lr_tableaux_contents(outer: Sequence[int], inner: Sequence[int],
                         content_cap: Optional[Sequence[int]] = None) -> Expansion:
    """
    统计形状 outer/inner 上 LR 斜表按内容分组的个数

    Args:
        outer: λ
        inner: μ，须满足 μ ⊆ λ
        content_cap: 若给定 ν，只保留内容不超过 ν 的填充

    Returns:
        {ν: c^λ_{μν}}
    """
    outer, inner = as_partition(outer), as_partition(inner)
    cells = _reading_cells(outer, inner)
    if not cells:
        return {Partition(): 1}

    cap = list(content_cap) if content_cap is not None else None
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 1)
    result: Expansion = {}

    def place(k: int):
        if k == len(cells):
            key = Partition(c for c in counts if c)
            result[key] = result.get(key, 0) + 1
            return
        i, j = cells[k]
        upper = i + 1
        right = filling.get((i, j + 1))
        if right is not None:
            upper = min(upper, right)
        above = filling.get((i - 1, j))
        lower = above + 1 if above is not None else 1
        for v in range(lower, upper + 1):
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            if cap is not None and (v > len(cap) or counts[v - 1] + 1 > cap[v - 1]):
                continue
            filling[(i, j)] = v
            counts[v - 1] += 1
            place(k + 1)
            counts[v - 1] -= 1
            del filling[(i, j)]

    place(0)
    return result


class NativeLRBackend:
    """纯 Python 回溯实现"""

    name = "native"

    def skew(self, outer: Partition, inner: Partition) -> Expansion:
        return lr_tableaux_contents(outer, inner)

    def coefficient(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        return lr_tableaux_contents(lam, mu, content_cap=nu).get(nu, 0)


class LrcalcBackend:
    """lrcalc 编译后端"""

    name = "lrcalc"

    def __init__(self):
        import lrcalc
        self._lrcalc = lrcalc

    def skew(self, outer: Partition, inner: Partition) -> Expansion:
        if outer == inner:
            return {Partition(): 1}
        raw = self._lrcalc.skew(list(outer), list(inner))
        return {Partition(k): int(v) for k, v in raw.items() if v}

    def coefficient(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        return int(self._lrcalc.lrcoef(list(lam), list(mu), list(nu)))


_backend = None


def get_backend(name: Optional[str] = None):
    """按配置选择后端；auto 在 lrcalc 不可用时回退到原生实现"""
    global _backend
    if name is None and _backend is not None:
        return _backend
    if name is None:
        from ..config import get_compute_settings
        name = get_compute_settings().lr_backend

    if name == "native":
        backend = NativeLRBackend()
    elif name == "lrcalc":
        backend = LrcalcBackend()
    else:
        try:
            backend = LrcalcBackend()
        except ImportError:
            logger.debug("lrcalc 未安装，使用原生 LR 引擎")
            backend = NativeLRBackend()
    _backend = backend
    return backend


def set_backend(name: str):
    """切换后端并清空依赖后端的缓存"""
    global _backend
    _backend = None
    backend = get_backend(name)
    from .algebra import clear_caches
    clear_caches()
    return backend


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^λ_{μν}；μ ⊄ λ 或大小不符时为 0"""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not lam.contains(mu) or lam.size != mu.size + nu.size:
        return 0
    if not lam.contains(nu):
        return 0
    return get_backend().coefficient(lam, mu, nu)
