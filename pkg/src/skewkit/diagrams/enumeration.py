"""
连通斜图枚举
作者: XYZ-Algorithm-Team
用途: 按单元格数或 content 跨度穷举连通斜图；在给定单元格集合内枚举以某格为东北角的连通子斜图
"""

import logging
from typing import Iterable, Iterator, List, Optional, Tuple

from ..utils.errors import EnumerationCapError
from .skew import Cell, CellSet, SkewDiagram

logger = logging.getLogger(__name__)

Interval = Tuple[int, int]


def _from_bottom_up(intervals: List[Interval]) -> SkewDiagram:
    rows = list(reversed(intervals))
    return SkewDiagram(frozenset(
        (i, j) for i, (lo, hi) in enumerate(rows) for j in range(lo, hi + 1)
    ))


def _grow(intervals: List[Interval], remaining: int) -> Iterator[List[Interval]]:
    """自下而上逐行添加：上一行左端点落在 [l, r]，右端点不小于 r"""
    if remaining == 0:
        yield intervals
        return
    lo, hi = intervals[-1]
    for new_lo in range(lo, hi + 1):
        first_hi = max(hi, new_lo)
        for new_hi in range(first_hi, new_lo + remaining):
            intervals.append((new_lo, new_hi))
            yield from _grow(intervals, remaining - (new_hi - new_lo + 1))
            intervals.pop()


def _resolve_cap(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    from ..config import get_enumeration_settings
    return get_enumeration_settings().max_cells


def enumerate_connected(n: int, cap: Optional[int] = None) -> List[SkewDiagram]:
    """
    恰有 n 个单元格的全部连通斜图，按 (λ, μ) 排序

    Args:
        n: 单元格数
        cap: 上限，默认取 SKEWKIT_MAX_CELLS

    Raises:
        EnumerationCapError: n 不在 [1, cap] 内
    """
    limit = _resolve_cap(cap)
    if not 1 <= n <= limit:
        raise EnumerationCapError(f"n={n} outside the enumeration range [1, {limit}]")

    diagrams = []
    for bottom in range(1, n + 1):
        for intervals in _grow([(0, bottom - 1)], n - bottom):
            diagrams.append(_from_bottom_up(intervals))
    diagrams.sort(key=lambda d: d.sort_key)
    logger.debug(f"枚举 {n} 格连通斜图: {len(diagrams)} 个")
    return diagrams


def enumerate_by_span(span: int, max_cells: Optional[int] = None) -> List[SkewDiagram]:
    """content 跨度恰为 span 的连通斜图，可选限制单元格数"""
    if span < 0:
        return []
    found: List[SkewDiagram] = []

    def walk(intervals: List[Interval], size: int):
        lo, hi = intervals[-1]
        current = hi + len(intervals) - 1
        if current == span:
            found.append(_from_bottom_up(intervals))
            return
        for new_lo in range(lo, hi + 1):
            for new_hi in range(max(hi, new_lo), span - len(intervals) + 1):
                width = new_hi - new_lo + 1
                if max_cells is not None and size + width > max_cells:
                    break
                intervals.append((new_lo, new_hi))
                walk(intervals, size + width)
                intervals.pop()

    for bottom in range(1, span + 2):
        if max_cells is not None and bottom > max_cells:
            break
        walk([(0, bottom - 1)], bottom)
    found.sort(key=lambda d: d.sort_key)
    return found


def corner_subdiagrams(cells: Iterable[Cell], corner: Cell,
                       max_cells: Optional[int] = None) -> List[CellSet]:
    """
    cells 中以 corner 为最东北单元格的全部连通斜子集（保持原坐标）

    自上而下逐行延伸：首行为 [l0, c]；下一行 [l, r] 满足 r ≤ r_prev、l ≤ l_prev、r ≥ l_prev。
    """
    cells = frozenset(cells)
    if corner not in cells:
        return []
    top, right = corner
    results: List[CellSet] = []

    def row_fits(row: int, lo: int, hi: int) -> bool:
        return all((row, j) in cells for j in range(lo, hi + 1))

    def walk(row: int, lo: int, hi: int, acc: List[Cell]):
        results.append(frozenset(acc))
        below = row + 1
        # 下一行的右端点落在 [lo, hi]，左端点向西延伸直到出界
        for new_hi in range(lo, hi + 1):
            if (below, new_hi) not in cells:
                continue
            new_lo = new_hi
            while True:
                if new_lo <= lo and row_fits(below, new_lo, new_hi):
                    width = new_hi - new_lo + 1
                    if max_cells is None or len(acc) + width <= max_cells:
                        added = [(below, j) for j in range(new_lo, new_hi + 1)]
                        walk(below, new_lo, new_hi, acc + added)
                if (below, new_lo - 1) not in cells:
                    break
                new_lo -= 1

    lo = right
    while True:
        if max_cells is None or right - lo + 1 <= max_cells:
            walk(top, lo, right, [(top, j) for j in range(lo, right + 1)])
        if (top, lo - 1) not in cells:
            break
        lo -= 1
    return results
