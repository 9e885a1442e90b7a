"""
重叠形状与假设 I–V
作者: XYZ-Algorithm-Team
用途: 在截断的无穷拼接 E^{⊔_W ∞} 中计算 W̄、Ō，并逐条检查放置是否满足假设 I–V
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..diagrams.skew import (
    EMPTY,
    CellSet,
    SkewDiagram,
    Vector,
    add,
    cells_connected,
    content,
    edge_adjacent,
    is_skew_cells,
    scale,
    translate,
)
from ..utils.errors import InvalidDiagramError
from .placement import WPlacement, find_w_placements

logger = logging.getLogger(__name__)

_SE = (1, 1)


@dataclass(frozen=True)
class OverlapShapes:
    """W̄、Ō 及其在截断拼接中的位置（中间副本）"""
    barW: SkewDiagram
    barO: SkewDiagram
    amalgam: CellSet
    bar_w_cells: CellSet
    bar_o_cells: CellSet
    shift: Vector

    def to_json(self) -> Dict[str, Any]:
        return {
            "barW": self.barW.to_json(),
            "barO": self.barO.to_json(),
            "barW_size": len(self.barW),
            "barO_size": len(self.barO),
        }


def _copies(copies: Optional[int]) -> int:
    if copies is None:
        from ..config import get_compute_settings
        copies = get_compute_settings().amalgam_copies
    if copies < 3:
        raise ValueError("at least three amalgamated copies are required")
    return copies


def overlap_shapes(pl: WPlacement, copies: Optional[int] = None) -> OverlapShapes:
    """
    计算 W̄ 与 Ō

    Ō 取中间 O 副本中东南对角邻格仍在该副本内的单元格；W̄ 取
    {x ∈ 𝐄 : x+(1,1) ∈ W₁} ∪ {x ∈ W₁ : x+(1,1) ∈ 𝐄}，W₁ 为中间的 W 副本。

    Raises:
        InvalidDiagramError: 假设不成立时 W̄ 或 Ō 可能不是斜图
    """
    copies = _copies(copies)
    a = pl.shift
    amalgam = frozenset().union(*(translate(pl.E.cells, scale(k, a)) for k in range(copies)))
    middle = scale(copies // 2, a)

    o_mid = translate(pl.O, middle)
    bar_o = frozenset(x for x in o_mid if add(x, _SE) in o_mid)

    if pl.is_empty:
        bar_w = frozenset()
    else:
        w_mid = translate(pl.sw, middle)
        bar_w = frozenset(x for x in amalgam if add(x, _SE) in w_mid)
        bar_w |= frozenset(x for x in w_mid if add(x, _SE) in amalgam)

    return OverlapShapes(
        barW=SkewDiagram(bar_w) if bar_w else EMPTY,
        barO=SkewDiagram(bar_o) if bar_o else EMPTY,
        amalgam=amalgam,
        bar_w_cells=bar_w,
        bar_o_cells=bar_o,
        shift=a,
    )


# ---------------------------------------------------------------------------
# 假设
# ---------------------------------------------------------------------------

@dataclass
class HypothesisReport:
    """假设 I–V 的逐条结果与说明"""
    placement: WPlacement
    h1: bool
    h2: bool
    h3: bool
    h4: bool
    h5: bool
    witnesses: Dict[str, str] = field(default_factory=dict)
    overlap: Optional[OverlapShapes] = None

    @property
    def case(self) -> Optional[str]:
        return self.placement.case

    @property
    def overall_I_to_IV(self) -> bool:
        return self.h1 and self.h2 and self.h3 and self.h4 and self.case is not None

    @property
    def overall_I_to_V(self) -> bool:
        """V 只在情形 a、b 下要求"""
        return self.overall_I_to_IV and (self.h5 or self.case in ("c", "d"))

    def failed(self):
        names = ("I", "II", "III", "IV", "V")
        flags = (self.h1, self.h2, self.h3, self.h4, self.h5)
        return [name for name, ok in zip(names, flags) if not ok]

    def to_json(self) -> Dict[str, Any]:
        payload = {
            "placement": self.placement.to_json(),
            "case": self.case,
            "h1": self.h1,
            "h2": self.h2,
            "h3": self.h3,
            "h4": self.h4,
            "h5": self.h5,
            "overall_I_to_IV": self.overall_I_to_IV,
            "overall_I_to_V": self.overall_I_to_V,
            "witnesses": dict(sorted(self.witnesses.items())),
        }
        if self.overlap is not None:
            payload["overlap"] = self.overlap.to_json()
        return payload


def _contents(cells: CellSet) -> frozenset:
    return frozenset(content(c) for c in cells)


def _maximal(pl: WPlacement):
    """I：不存在占据同一组对角线、严格包含 W_ne 的其他放置"""
    if pl.is_empty:
        return True, "W is empty"
    diagonals = _contents(pl.ne)
    for other in find_w_placements(pl.E):
        if other.ne > pl.ne and _contents(other.ne) == diagonals:
            return False, f"W' = {other.W.describe()} on the same diagonals also lies in top and bottom"
    return True, "no larger W on the same diagonals"


def _separated(pl: WPlacement):
    """II：W_ne 与 W_sw 之间至少隔一条对角线"""
    if pl.is_empty:
        return True, "W is empty"
    gap = min(content(c) for c in pl.ne) - max(content(c) for c in pl.sw)
    if gap >= 2:
        return True, f"diagonal gap {gap}"
    return False, f"diagonal gap {gap} < 2"


def _complement(pl: WPlacement):
    """III：E 去掉任一 W 副本后是非空连通斜图"""
    for label, copy in (("W_ne", pl.ne), ("W_sw", pl.sw)):
        rest = pl.E.cells - copy
        if not rest:
            return False, f"E minus {label} is empty"
        if not cells_connected(rest):
            return False, f"E minus {label} is disconnected"
        if not is_skew_cells(rest):
            return False, f"E minus {label} is not a skew diagram"
    return True, "both complements are connected skew diagrams"


def _no_adjacent_overlaps(pl: WPlacement, shapes: Optional[OverlapShapes]):
    """IV：无穷拼接中 Ō 的副本不与 W̄ 的任何副本相邻"""
    if shapes is None:
        return False, "overlap shapes are not skew diagrams"
    if not shapes.bar_w_cells or not shapes.bar_o_cells:
        return True, "barW or barO is empty"
    for t in range(-2, 3):
        moved = translate(shapes.bar_w_cells, scale(t, shapes.shift))
        if edge_adjacent(shapes.bar_o_cells, moved):
            return False, f"barO touches the barW copy shifted by {t}"
    return True, "barO is not adjacent to any barW copy"


def _single_contact(pl: WPlacement):
    """V：至少一个 W 副本恰有一个单元格与 O 相邻"""
    if pl.is_empty:
        return True, "W is empty"
    o_cells = pl.O
    counts = []
    for label, copy in (("W_sw", pl.sw), ("W_ne", pl.ne)):
        touching = sum(1 for c in copy if edge_adjacent([c], o_cells))
        counts.append(f"{label}:{touching}")
        if touching == 1:
            return True, f"{label} has exactly one cell adjacent to O"
    return False, "cells adjacent to O " + ", ".join(counts)


def check_hypotheses(pl: WPlacement, copies: Optional[int] = None) -> HypothesisReport:
    """逐条检查假设 I–V，不抛出异常"""
    h1, w1 = _maximal(pl)
    h2, w2 = _separated(pl)
    h3, w3 = _complement(pl)
    try:
        shapes = overlap_shapes(pl, copies)
    except InvalidDiagramError:
        shapes = None
    h4, w4 = _no_adjacent_overlaps(pl, shapes)
    h5, w5 = _single_contact(pl)
    witnesses = {"I": w1, "II": w2, "III": w3, "IV": w4, "V": w5}
    if pl.case is None:
        witnesses["case"] = "attachment of W to O is undetermined"

    report = HypothesisReport(
        placement=pl, h1=h1, h2=h2, h3=h3, h4=h4, h5=h5,
        witnesses=witnesses, overlap=shapes,
    )
    logger.debug(f"{pl.describe()} 假设检查: 未通过 {report.failed() or '无'}")
    return report
