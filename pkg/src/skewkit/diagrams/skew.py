"""
斜图与带状图
作者: XYZ-Algorithm-Team
用途: 斜图的规范表示（行向南递增，content = col - row）、基本几何操作、
     西北/东南边界带与原始坐标系下的单元格集合工具
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..utils.errors import ConnectivityError, InvalidDiagramError
from .partition import Partition, as_partition

Cell = Tuple[int, int]
Vector = Tuple[int, int]
CellSet = FrozenSet[Cell]

_NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))


# ---------------------------------------------------------------------------
# 原始坐标系下的单元格集合工具（不做规范化，保持调用方的坐标系）
# ---------------------------------------------------------------------------

def translate(cells: Iterable[Cell], vector: Vector) -> CellSet:
    di, dj = vector
    return frozenset((i + di, j + dj) for i, j in cells)


def add(u: Vector, v: Vector) -> Vector:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Vector, v: Vector) -> Vector:
    return (u[0] - v[0], u[1] - v[1])


def scale(k: int, v: Vector) -> Vector:
    return (k * v[0], k * v[1])


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def ne_corner(cells: Iterable[Cell]) -> Cell:
    """最东北的单元格：最上一行的最右端"""
    cells = list(cells)
    top = min(i for i, _ in cells)
    return (top, max(j for i, j in cells if i == top))


def sw_corner(cells: Iterable[Cell]) -> Cell:
    """最西南的单元格：最下一行的最左端"""
    cells = list(cells)
    bottom = max(i for i, _ in cells)
    return (bottom, min(j for i, j in cells if i == bottom))


def components(cells: Iterable[Cell]) -> List[CellSet]:
    """按边相邻划分连通分支，按最小 content 从西南到东北排序"""
    remaining = set(cells)
    parts: List[CellSet] = []
    while remaining:
        seed = remaining.pop()
        stack, found = [seed], {seed}
        while stack:
            i, j = stack.pop()
            for di, dj in _NEIGHBOURS:
                nb = (i + di, j + dj)
                if nb in remaining:
                    remaining.discard(nb)
                    found.add(nb)
                    stack.append(nb)
        parts.append(frozenset(found))
    parts.sort(key=lambda part: (min(content(c) for c in part), sorted(part)))
    return parts


def cells_connected(cells: Iterable[Cell]) -> bool:
    cells = frozenset(cells)
    return bool(cells) and len(components(cells)) == 1


def edge_adjacent(first: Iterable[Cell], second: Iterable[Cell]) -> bool:
    """两个集合是否有共边单元格（重合也算）"""
    second = frozenset(second)
    for i, j in first:
        if (i, j) in second:
            return True
        if any((i + di, j + dj) in second for di, dj in _NEIGHBOURS):
            return True
    return False


def nw_cells(cells: Iterable[Cell]) -> CellSet:
    """西北边界：西北对角邻格不在集合内的单元格"""
    cells = frozenset(cells)
    return frozenset((i, j) for i, j in cells if (i - 1, j - 1) not in cells)


def se_cells(cells: Iterable[Cell]) -> CellSet:
    """东南边界：东南对角邻格不在集合内的单元格"""
    cells = frozenset(cells)
    return frozenset((i, j) for i, j in cells if (i + 1, j + 1) not in cells)


def diagonal_depths(cells: Iterable[Cell], towards: str = "nw") -> Dict[Cell, int]:
    """每个单元格所在对角线上位于其西北（或东南）方向的单元格数"""
    cells = frozenset(cells)
    step = -1 if towards == "nw" else 1
    depths = {}
    for i, j in cells:
        depth, k = 0, 1
        while (i + step * k, j + step * k) in cells:
            depth += 1
            k += 1
        depths[(i, j)] = depth
    return depths


def normalize_cells(cells: Iterable[Cell]) -> CellSet:
    """删除所有空行空列并平移到 (0, 0)"""
    cells = frozenset((int(i), int(j)) for i, j in cells)
    if not cells:
        return frozenset()
    row_index = {r: k for k, r in enumerate(sorted({i for i, _ in cells}))}
    col_index = {c: k for k, c in enumerate(sorted({j for _, j in cells}))}
    return frozenset((row_index[i], col_index[j]) for i, j in cells)


def row_intervals(cells: CellSet) -> Optional[List[Tuple[int, int]]]:
    """规范单元格集合的逐行区间；某行不连续时返回 None"""
    rows: Dict[int, List[int]] = {}
    for i, j in cells:
        rows.setdefault(i, []).append(j)
    intervals = []
    for i in range(len(rows)):
        cols = rows.get(i)
        if not cols:
            return None
        lo, hi = min(cols), max(cols)
        if hi - lo + 1 != len(cols):
            return None
        intervals.append((lo, hi))
    return intervals


def is_skew_cells(cells: Iterable[Cell]) -> bool:
    """规范化后逐行区间的左右端点都自上而下弱递减"""
    canonical = normalize_cells(cells)
    if not canonical:
        return True
    intervals = row_intervals(canonical)
    if intervals is None:
        return False
    return all(lo1 >= lo2 and hi1 >= hi2
               for (lo1, hi1), (lo2, hi2) in zip(intervals, intervals[1:]))


# ---------------------------------------------------------------------------
# 斜图
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SkewDiagram:
    """规范位置下的斜图 λ/μ；相等即规范单元格集合相等"""

    cells: CellSet = frozenset()

    def __post_init__(self):
        canonical = normalize_cells(self.cells)
        if not is_skew_cells(canonical):
            raise InvalidDiagramError(f"cells do not form a skew diagram: {sorted(canonical)}")
        object.__setattr__(self, "cells", canonical)

    # --- 相等与排序 -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewDiagram):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    @property
    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (tuple(self.lam), tuple(self.mu))

    # --- 形状参数 -------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @cached_property
    def intervals(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(row_intervals(self.cells) or ())

    @property
    def rows(self) -> int:
        return len(self.intervals)

    @property
    def cols(self) -> int:
        return max((j for _, j in self.cells), default=-1) + 1

    @cached_property
    def lam(self) -> Partition:
        """λ₁ 与 ℓ(λ) 取最小"""
        return Partition(hi + 1 for _, hi in self.intervals)

    @cached_property
    def mu(self) -> Partition:
        return Partition(lo for lo, _ in self.intervals)

    @property
    def row_lengths(self) -> Tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.intervals)

    @cached_property
    def contents(self) -> Counter:
        return Counter(content(c) for c in self.cells)

    @property
    def min_content(self) -> int:
        return min(self.contents)

    @property
    def max_content(self) -> int:
        return max(self.contents)

    @property
    def content_span(self) -> int:
        return self.max_content - self.min_content if self.cells else 0

    @property
    def diagonals(self) -> int:
        """占据的对角线条数"""
        return len(self.contents)

    @property
    def ne_cell(self) -> Cell:
        return ne_corner(self.cells)

    @property
    def sw_cell(self) -> Cell:
        return sw_corner(self.cells)

    # --- 谓词 ----------------------------------------------------------------

    @cached_property
    def is_connected(self) -> bool:
        return cells_connected(self.cells)

    @cached_property
    def is_ribbon(self) -> bool:
        if not self.is_connected:
            return False
        return not any((i + 1, j) in self.cells and (i, j + 1) in self.cells
                       and (i + 1, j + 1) in self.cells for i, j in self.cells)

    def require_connected(self, operation: str) -> None:
        if not self.is_connected:
            raise ConnectivityError(f"{operation} requires a connected diagram, got {self.describe()}")

    # --- 变换 ----------------------------------------------------------------

    def transpose(self) -> 'SkewDiagram':
        return SkewDiagram(frozenset((j, i) for i, j in self.cells))

    def rotate180(self) -> 'SkewDiagram':
        return SkewDiagram(frozenset((-i, -j) for i, j in self.cells))

    # --- 边界带 --------------------------------------------------------------

    def nw_ribbon(self) -> 'Ribbon':
        self.require_connected("nw_ribbon")
        return Ribbon(nw_cells(self.cells))

    def se_ribbon(self) -> 'Ribbon':
        self.require_connected("se_ribbon")
        return Ribbon(se_cells(self.cells))

    def nw_body(self) -> 'SkewDiagram':
        """D 去掉东南边界带，即东南对角邻格仍在 D 内的单元格"""
        return SkewDiagram(self.cells - se_cells(self.cells))

    def up_body_size(self) -> int:
        """正南方仍有单元格的单元格个数"""
        return sum(1 for i, j in self.cells if (i + 1, j) in self.cells)

    # --- 编码 ----------------------------------------------------------------

    def to_json(self) -> Dict[str, List[int]]:
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    def describe(self) -> str:
        if not self.cells:
            return "∅"
        if self.mu:
            return f"{tuple(self.lam)}/{tuple(self.mu)}"
        return f"{tuple(self.lam)}"

    def __repr__(self) -> str:
        return f"SkewDiagram({self.describe()})"


@dataclass(frozen=True, eq=False)
class Ribbon(SkewDiagram):
    """连通且不含 2×2 子图的斜图"""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_ribbon:
            raise InvalidDiagramError(f"not a ribbon: {self.describe()}")

    def __repr__(self) -> str:
        return f"Ribbon({self.describe()})"


EMPTY = SkewDiagram()


def make_skew(lam: Iterable[int], mu: Iterable[int] = ()) -> SkewDiagram:
    """由 λ/μ 构造斜图；μ ⊄ λ 时拒绝"""
    lam, mu = as_partition(lam), as_partition(mu)
    if not lam.contains(mu):
        raise InvalidDiagramError(f"mu={list(mu)} is not contained in lambda={list(lam)}")
    return SkewDiagram(frozenset(
        (i, j) for i in range(len(lam)) for j in range(mu.part(i), lam[i])
    ))


def straight(lam: Iterable[int]) -> SkewDiagram:
    return make_skew(lam, ())


# 函数形式接口

def is_connected(diagram: SkewDiagram) -> bool:
    return diagram.is_connected


def is_ribbon(diagram: SkewDiagram) -> bool:
    return diagram.is_ribbon


def transpose(diagram: SkewDiagram) -> SkewDiagram:
    return diagram.transpose()


def rotate180(diagram: SkewDiagram) -> SkewDiagram:
    return diagram.rotate180()


def nw_ribbon(diagram: SkewDiagram) -> Ribbon:
    return diagram.nw_ribbon()


def se_ribbon(diagram: SkewDiagram) -> Ribbon:
    return diagram.se_ribbon()


def nw_body(diagram: SkewDiagram) -> SkewDiagram:
    return diagram.nw_body()


def up_body_size(diagram: SkewDiagram) -> int:
    return diagram.up_body_size()


def contents(diagram: SkewDiagram) -> Counter:
    return Counter(diagram.contents)
