"""
W 在 E 中的放置
作者: XYZ-Algorithm-Team
用途: 枚举同时位于 E 顶部与底部的子斜图 W，确定两个副本 W_sw / W_ne、拼接平移量 a 与连接情形 a/b/c/d
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Optional

from ..diagrams.enumeration import corner_subdiagrams
from ..diagrams.skew import (
    EMPTY,
    CellSet,
    SkewDiagram,
    Vector,
    add,
    cells_connected,
    ne_corner,
    normalize_cells,
    sub,
    sw_corner,
    translate,
)
from ..utils.errors import PlacementError

logger = logging.getLogger(__name__)

CASES = ("a", "b", "c", "d")
CASE_ARROWS = {"a": "→W→O", "b": "↑W↑O", "c": "→W↑O", "d": "↑W→O"}


def attachment_case(e_cells: CellSet, sw: CellSet, ne: CellSet) -> Optional[str]:
    """
    连接情形：O 的西南角格西邻 / 南邻在 W_sw 中为水平 / 竖直连接，
    O 的东北角格东邻 / 北邻在 W_ne 中为水平 / 竖直连接
    """
    if not sw and not ne:
        return "a"
    rest = e_cells - sw - ne
    if not rest:
        return None
    i, j = sw_corner(rest)
    lower_h, lower_v = (i, j - 1) in sw, (i + 1, j) in sw
    i, j = ne_corner(rest)
    upper_h, upper_v = (i, j + 1) in ne, (i - 1, j) in ne
    if lower_h == lower_v or upper_h == upper_v:
        return None
    return {(True, True): "a", (False, False): "b",
            (True, False): "c", (False, True): "d"}[(lower_h, upper_h)]


@dataclass(frozen=True)
class WPlacement:
    """E 中 W 的两个副本（E 的规范坐标）与连接情形"""
    E: SkewDiagram
    W: SkewDiagram
    sw: CellSet
    ne: CellSet
    case: Optional[str]
    shift: Vector

    @property
    def is_empty(self) -> bool:
        return self.W.is_empty

    @property
    def O(self) -> CellSet:
        """E 去掉两个 W 副本后的单元格"""
        return self.E.cells - self.sw - self.ne

    @property
    def O_diagram(self) -> SkewDiagram:
        return SkewDiagram(self.O)

    @property
    def marked(self) -> CellSet:
        return self.sw | self.ne

    def rotated(self) -> 'WPlacement':
        """E* 中的放置：旋转后 W_ne 成为 W*_sw"""
        rows, cols = self.E.rows - 1, self.E.cols - 1

        def rot(cells):
            return frozenset((rows - i, cols - j) for i, j in cells)

        return placement_from_cells(self.E.rotate180(), rot(self.ne), rot(self.sw))

    def transposed(self) -> 'WPlacement':
        """Eᵗ 中的放置：转置后 W_ne 成为 Wᵗ_sw"""
        def flip(cells):
            return frozenset((j, i) for i, j in cells)

        return placement_from_cells(self.E.transpose(), flip(self.ne), flip(self.sw))

    def describe(self) -> str:
        w = self.W.describe()
        return f"E={self.E.describe()} W={w} case={self.case or '?'}"

    def to_json(self) -> Dict[str, Any]:
        return {
            "E": self.E.to_json(),
            "W": self.W.to_json(),
            "sw": sorted([list(c) for c in self.sw]),
            "ne": sorted([list(c) for c in self.ne]),
            "case": self.case,
            "shift": list(self.shift),
        }


def _shift(e: SkewDiagram, sw: CellSet, ne: CellSet) -> Vector:
    if not sw:
        return add(sub(e.ne_cell, e.sw_cell), (0, 1))
    return sub(ne_corner(ne), ne_corner(sw))


def _build(e: SkewDiagram, w: SkewDiagram, sw: CellSet, ne: CellSet) -> WPlacement:
    return WPlacement(
        E=e, W=w, sw=sw, ne=ne,
        case=attachment_case(e.cells, sw, ne),
        shift=_shift(e, sw, ne),
    )


def empty_placement(e: SkewDiagram) -> WPlacement:
    """W = ∅：W_sw 为西南角格的西边，W_ne 为东北角格的东边"""
    if e.is_empty:
        raise PlacementError("cannot place W in an empty diagram")
    return _build(e, EMPTY, frozenset(), frozenset())


def place_w(e: SkewDiagram, w: SkewDiagram) -> WPlacement:
    """W 的东北角格对齐 E 的东北角格得 W_ne，西南角格对齐 E 的西南角格得 W_sw"""
    if w.is_empty:
        return empty_placement(e)
    if not w.is_connected:
        raise PlacementError(f"W must be connected, got {w.describe()}")
    ne = translate(w.cells, sub(e.ne_cell, w.ne_cell))
    sw = translate(w.cells, sub(e.sw_cell, w.sw_cell))
    if not ne <= e.cells:
        raise PlacementError(f"W={w.describe()} does not lie in the top of E={e.describe()}")
    if not sw <= e.cells:
        raise PlacementError(f"W={w.describe()} does not lie in the bottom of E={e.describe()}")
    return _build(e, w, sw, ne)


def placement_from_cells(e: SkewDiagram, sw, ne) -> WPlacement:
    """由显式给出的两个副本构造放置"""
    sw, ne = frozenset(sw), frozenset(ne)
    if not sw and not ne:
        return empty_placement(e)
    if not sw <= e.cells or not ne <= e.cells:
        raise PlacementError("W copies must lie inside E")
    if normalize_cells(sw) != normalize_cells(ne) or len(sw) != len(ne):
        raise PlacementError("W_sw and W_ne are not translates of each other")
    if sub(ne_corner(ne), ne_corner(sw)) != sub(sw_corner(ne), sw_corner(sw)):
        raise PlacementError("W_sw and W_ne are not translates of each other")
    if e.ne_cell not in ne:
        raise PlacementError("W_ne must contain the northeasternmost cell of E")
    if e.sw_cell not in sw:
        raise PlacementError("W_sw must contain the southwesternmost cell of E")
    if not cells_connected(ne):
        raise PlacementError("W must be connected")
    return _build(e, SkewDiagram(ne), sw, ne)


@lru_cache(maxsize=4096)
def find_w_placements(e: SkewDiagram) -> tuple:
    """
    E 顶部与底部同时包含的全部 W（含 ∅），按 (|W|, 单元格) 排序

    Hypothesis I 不在此过滤。
    """
    e.require_connected("find_w_placements")
    found = [empty_placement(e)]
    for ne in corner_subdiagrams(e.cells, e.ne_cell):
        w = SkewDiagram(ne)
        sw = translate(w.cells, sub(e.sw_cell, w.sw_cell))
        if not sw <= e.cells:
            continue
        found.append(_build(e, w, sw, ne))
    found.sort(key=lambda pl: (len(pl.W), sorted(pl.ne)))
    logger.debug(f"{e.describe()} 共有 {len(found)} 个 W 放置")
    return tuple(found)


def placement_from_marked(e: SkewDiagram, marked) -> WPlacement:
    """ASCII 图中 w 标记的单元格恰为两个副本之并"""
    marked = frozenset(marked)
    for pl in find_w_placements(e):
        if pl.marked == marked:
            return pl
    raise PlacementError(f"marked cells do not form a W placement in {e.describe()}")


def placement_from_spec(e: SkewDiagram, spec: Any) -> WPlacement:
    """
    命令行 --w 参数

    支持 W 形状 JSON（{"lambda","mu"} / {"cells"} / {"art"}）、
    {"sw": [[i,j],...], "ne": [[i,j],...]}（E 规范坐标）以及 {"empty": true}
    """
    from ..utils.diagram_io import cells_from_json, diagram_from_json

    if spec is None:
        return empty_placement(e)
    if isinstance(spec, dict):
        if spec.get("empty"):
            return empty_placement(e)
        if "sw" in spec or "ne" in spec:
            return placement_from_cells(e, cells_from_json(spec.get("sw", [])),
                                        cells_from_json(spec.get("ne", [])))
    return place_w(e, diagram_from_json(spec))
