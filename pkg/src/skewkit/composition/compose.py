"""
拼接与复合
作者: XYZ-Algorithm-Team
用途: E₁ ⊔_W E₂、拼接幂、四种点积构造 (A)–(D) 以及 D ∘_W E 的西北 / 东南两种构造
"""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

from ..diagrams.skew import (
    Cell,
    CellSet,
    SkewDiagram,
    Vector,
    add,
    cells_connected,
    content,
    diagonal_depths,
    is_skew_cells,
    nw_cells,
    scale,
    se_cells,
    sub,
    translate,
)
from ..utils.errors import HypothesisError, InvalidDiagramError, PlacementError
from .overlap import check_hypotheses
from .placement import WPlacement, empty_placement, place_w

logger = logging.getLogger(__name__)

_SE = (1, 1)
_NW = (-1, -1)


# ---------------------------------------------------------------------------
# 拼接
# ---------------------------------------------------------------------------

def amalgamate(e1: SkewDiagram, w: Union[SkewDiagram, WPlacement], e2: SkewDiagram) -> SkewDiagram:
    """
    E₁ ⊔_W E₂：E₁ 顶部的 W 与 E₂ 底部的 W 重合

    Raises:
        PlacementError: W 不在 E₁ 顶部或 E₂ 底部
    """
    if isinstance(w, WPlacement):
        w = w.W
    if w.is_empty:
        shift = sub(add(e1.ne_cell, (0, 1)), e2.sw_cell)
    else:
        top = place_w(e1, w).ne
        bottom = place_w(e2, w).sw
        shift = sub(min(top), min(bottom))
    return SkewDiagram(e1.cells | translate(e2.cells, shift))


def _power_cells(pl: WPlacement, m: int) -> CellSet:
    return frozenset().union(*(translate(pl.E.cells, scale(k, pl.shift)) for k in range(m)))


def amalg_power(e: SkewDiagram, pl: WPlacement, m: int) -> SkewDiagram:
    """E^{⊔_W m}，m = 0 时为 W"""
    if pl.E != e:
        raise PlacementError("placement does not belong to E")
    if m < 0:
        raise ValueError("amalgam power must be non-negative")
    if m == 0:
        return pl.W
    return SkewDiagram(_power_cells(pl, m))


# ---------------------------------------------------------------------------
# 点积
# ---------------------------------------------------------------------------

def dot_candidates(pl: WPlacement) -> Dict[str, Tuple[CellSet, bool]]:
    """
    四种候选构造及其是否为连通斜图

    (A) E₂ 的下 W 位于 E₁ 上 W 西北一格；(B) 东南一格；
    (C) E₁ ⊔_W E₂ 外加东南一格的 W；(D) 外加西北一格的 W。
    """
    e, a = pl.E.cells, pl.shift
    glued = e | translate(e, a)
    candidates = {
        "A": e | translate(e, add(a, _NW)),
        "B": e | translate(e, add(a, _SE)),
        "C": glued | translate(pl.ne, _SE),
        "D": glued | translate(pl.ne, _NW),
    }
    return {
        key: (cells, cells_connected(cells) and is_skew_cells(cells))
        for key, cells in candidates.items()
    }


def dot_compose(e1: SkewDiagram, pl: WPlacement, e2: Optional[SkewDiagram] = None) -> SkewDiagram:
    """
    E₁ ·_W E₂，按连接情形取 (A)–(D) 之一

    E₁、E₂ 均为放置所属的 E（复合中两者同形）。
    """
    if e1 != pl.E or (e2 is not None and e2 != pl.E):
        raise PlacementError("dot product is defined for two copies of the placement's E")
    if pl.case is None:
        raise HypothesisError(f"attachment case undetermined for {pl.describe()}")
    cells, valid = dot_candidates(pl)[pl.case.upper()]
    if not valid:
        raise HypothesisError(f"dot construction ({pl.case.upper()}) is not a skew diagram for {pl.describe()}")
    return SkewDiagram(cells)


# ---------------------------------------------------------------------------
# 复合
# ---------------------------------------------------------------------------

def _check_relations(offsets: Dict[Cell, Vector],
                     relations: Iterable[Tuple[Cell, Cell, Vector]]) -> None:
    """生成关系：offset(d') − offset(d) 必须等于给定向量"""
    for d, d2, vector in relations:
        if d in offsets and d2 in offsets and sub(offsets[d2], offsets[d]) != vector:
            raise PlacementError(f"inconsistent copy offsets between {d} and {d2}")


def _assemble(pl: WPlacement, offsets: Dict[Cell, Vector], extras: List[Vector],
              connected: bool) -> SkewDiagram:
    cells = frozenset().union(*(translate(pl.E.cells, v) for v in offsets.values()))
    for v in extras:
        cells |= translate(pl.ne, v)
    if connected and not cells_connected(cells):
        raise InvalidDiagramError("composition is not connected")
    return SkewDiagram(cells)


def _compose_rows(d: SkewDiagram, pl: WPlacement) -> SkewDiagram:
    """情形 a/b：同行相邻为拼接，上下相邻为点积"""
    a = pl.shift
    b = add(a, _NW) if pl.case == "a" else add(a, _SE)
    offsets = {(i, j): sub(scale(j, a), scale(i, b)) for i, j in d.cells}
    relations = []
    for i, j in d.cells:
        relations.append(((i, j), (i, j + 1), a))
        relations.append(((i, j), (i - 1, j), b))
    _check_relations(offsets, relations)
    return _assemble(pl, offsets, [], d.is_connected)


def _ribbon_layout(d: SkewDiagram, pl: WPlacement, towards: str,
                   extra_border: Callable[[CellSet], CellSet]) -> SkewDiagram:
    """
    情形 c 的带状构造

    towards="nw"：西北分解，东南邻格的副本在东南一格；
    towards="se"：东南分解，西北邻格的副本在东南一格。
    同带上下相邻且两格都在 extra_border 上时补一个 W。
    """
    a = pl.shift
    depth = diagonal_depths(d.cells, towards)
    offsets = {cell: add(scale(content(cell), a), scale(depth[cell], _SE)) for cell in d.cells}
    diagonal_step = _SE if towards == "nw" else _NW

    border = extra_border(d.cells)
    relations, extras = [], []
    for cell in d.cells:
        i, j = cell
        west, south = (i, j - 1), (i + 1, j)
        if depth.get(west) == depth[cell]:
            relations.append((west, cell, a))
        if depth.get(south) == depth[cell]:
            relations.append((south, cell, a))
            if south in border and cell in border:
                extras.append(add(offsets[south], _SE))
        relations.append((cell, add(cell, diagonal_step), _SE))
    _check_relations(offsets, relations)
    return _assemble(pl, offsets, extras, d.is_connected)


def _require(e: SkewDiagram, pl: WPlacement, check: bool) -> None:
    if pl.E != e:
        raise PlacementError("placement does not belong to E")
    if check:
        report = check_hypotheses(pl)
        if not report.overall_I_to_IV:
            raise HypothesisError(
                f"hypotheses {', '.join(report.failed())} fail for {pl.describe()}", report)
    elif pl.case is None:
        raise HypothesisError(f"attachment case undetermined for {pl.describe()}")


def compose(d: SkewDiagram, e: SkewDiagram, pl: Optional[WPlacement] = None,
            check: bool = True) -> SkewDiagram:
    """
    D ∘_W E

    Args:
        d: 任意斜图，∅ ∘_W E = W
        e: 连通斜图
        pl: E 中 W 的放置，默认 W = ∅
        check: 是否先检查假设 I–IV

    Raises:
        HypothesisError: 假设 I–IV 不成立
        InvalidDiagramError: 结果不是斜图（仅在跳过检查时可能出现）
    """
    pl = pl or empty_placement(e)
    _require(e, pl, check)
    if d.is_empty:
        return pl.W
    if pl.case in ("a", "b"):
        result = _compose_rows(d, pl)
    elif pl.case == "c":
        result = _ribbon_layout(d, pl, "nw", se_cells)
    else:
        # (D ∘_W E)* = D* ∘_{W*} E*
        rotated = pl.rotated()
        result = compose(d.rotate180(), rotated.E, rotated, check=False).rotate180()
    logger.debug(f"{d.describe()} ∘ [{pl.describe()}] = {result.describe()}")
    return result


def compose_southeast(d: SkewDiagram, pl: WPlacement) -> SkewDiagram:
    """情形 c 下按东南分解构造 D ⋆_W E，应与 compose 结果相同"""
    if pl.case != "c":
        raise PlacementError("the southeast construction applies to case c placements")
    if d.is_empty:
        return pl.W
    return _ribbon_layout(d, pl, "se", nw_cells)
