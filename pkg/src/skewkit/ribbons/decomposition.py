"""
外带状分解与切割带
作者: XYZ-Algorithm-Team
用途: 东南 / 西北 / Jacobi-Trudi 三种外分解，逐对角线 go-north/go-east 判定，切割带区间 θ[p, q] 与 θ_i # θ_j
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..diagrams.skew import (
    Cell,
    CellSet,
    Ribbon,
    SkewDiagram,
    components,
    content,
    nw_cells,
    se_cells,
)
from ..utils.errors import InvalidDiagramError

logger = logging.getLogger(__name__)


class DecompositionKind(Enum):
    """分解类型"""
    SOUTHEAST = "se"
    NORTHWEST = "nw"
    JACOBI_TRUDI = "jt"

    @classmethod
    def parse(cls, value) -> 'DecompositionKind':
        if isinstance(value, cls):
            return value
        aliases = {"southeast": "se", "northwest": "nw", "jacobi-trudi": "jt", "jacobi_trudi": "jt"}
        value = aliases.get(str(value).lower(), str(value).lower())
        return cls(value)


class IntervalKind(Enum):
    RIBBON = "ribbon"
    EMPTY = "empty"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class StripInterval:
    """切割带在 content 区间 [p, q] 上的部分"""
    p: int
    q: int
    kind: IntervalKind
    ribbon: Optional[Ribbon] = None

    def value(self, ring):
        """Empty ↦ 1，Undefined ↦ 0"""
        if self.kind is IntervalKind.EMPTY:
            return ring.one
        if self.kind is IntervalKind.UNDEFINED:
            return ring.zero
        return ring.skew(self.ribbon)

    def to_json(self) -> Dict:
        payload = {"p": self.p, "q": self.q, "kind": self.kind.value}
        if self.ribbon is not None:
            payload["ribbon"] = self.ribbon.to_json()
        return payload


@dataclass
class OutsideDecomposition:
    """D 的有序带状分解及其切割带（content → 单元格）"""
    diagram: SkewDiagram
    kind: DecompositionKind
    ribbons: List[CellSet]
    strip: Dict[int, Cell] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.ribbons)

    def interval(self, index: int) -> Tuple[int, int]:
        """第 index 条带的 [p, q]"""
        contents = [content(c) for c in self.ribbons[index]]
        return min(contents), max(contents)

    @property
    def intervals(self) -> List[Tuple[int, int]]:
        return [self.interval(k) for k in range(len(self.ribbons))]

    def strip_ribbon(self) -> Ribbon:
        return Ribbon(frozenset(self.strip.values()))

    def ribbon_diagrams(self) -> List[Ribbon]:
        return [Ribbon(r) for r in self.ribbons]

    def to_json(self) -> Dict:
        return {
            "kind": self.kind.value,
            "ribbons": [sorted([list(c) for c in r]) for r in self.ribbons],
            "intervals": [list(iv) for iv in self.intervals],
            "strip": self.strip_ribbon().to_json(),
        }


# ---------------------------------------------------------------------------
# 分解
# ---------------------------------------------------------------------------

def _peel(cells: FrozenSet[Cell], border) -> List[CellSet]:
    """剥去边界带后对剩余部分的连通分支（西南到东北）递归"""
    ribbons = []
    pending = [cells]
    while pending:
        current = pending.pop(0)
        outer = border(current)
        ribbons.append(outer)
        rest = current - outer
        if rest:
            pending = components(rest) + pending
    return ribbons


def southeast_decomposition(diagram: SkewDiagram) -> OutsideDecomposition:
    diagram.require_connected("southeast_decomposition")
    ribbons = _peel(diagram.cells, se_cells)
    return _finish(diagram, DecompositionKind.SOUTHEAST, ribbons)


def northwest_decomposition(diagram: SkewDiagram) -> OutsideDecomposition:
    diagram.require_connected("northwest_decomposition")
    ribbons = _peel(diagram.cells, nw_cells)
    return _finish(diagram, DecompositionKind.NORTHWEST, ribbons)


def jacobi_trudi_decomposition(diagram: SkewDiagram) -> OutsideDecomposition:
    """按行分解，自北向南"""
    rows: Dict[int, set] = {}
    for i, j in diagram.cells:
        rows.setdefault(i, set()).add((i, j))
    ribbons = [frozenset(rows[i]) for i in sorted(rows)]
    return _finish(diagram, DecompositionKind.JACOBI_TRUDI, ribbons)


def decompose(diagram: SkewDiagram, kind) -> OutsideDecomposition:
    kind = DecompositionKind.parse(kind)
    if kind is DecompositionKind.SOUTHEAST:
        return southeast_decomposition(diagram)
    if kind is DecompositionKind.NORTHWEST:
        return northwest_decomposition(diagram)
    return jacobi_trudi_decomposition(diagram)


def _finish(diagram: SkewDiagram, kind: DecompositionKind,
            ribbons: List[CellSet]) -> OutsideDecomposition:
    dec = OutsideDecomposition(diagram=diagram, kind=kind, ribbons=ribbons)
    dec.strip = cutting_strip(diagram, ribbons)
    logger.debug(f"{kind.value} 分解 {diagram.describe()}: {len(ribbons)} 条带")
    return dec


# ---------------------------------------------------------------------------
# 切割带
# ---------------------------------------------------------------------------

def diagonal_directions(diagram: SkewDiagram, ribbons: List[CellSet]) -> Dict[int, str]:
    """
    每条对角线的走向 "north" / "east"

    同带北邻或东邻决定走向；带的东北端点只在北边界（或只在东边界）时投票，
    两边界同时成立的端点不投票；无票的对角线取 east，票数冲突时报错。
    """
    cells = diagram.cells
    owner = {c: k for k, ribbon in enumerate(ribbons) for c in ribbon}
    votes: Dict[int, set] = {}
    for (i, j), k in owner.items():
        north, east = (i - 1, j), (i, j + 1)
        if owner.get(north) == k:
            vote = "north"
        elif owner.get(east) == k:
            vote = "east"
        else:
            on_north = north not in cells
            on_east = east not in cells
            if on_north == on_east:
                continue
            vote = "north" if on_north else "east"
        votes.setdefault(content((i, j)), set()).add(vote)

    directions = {}
    for c in sorted(diagram.contents):
        chosen = votes.get(c, {"east"})
        if len(chosen) > 1:
            raise InvalidDiagramError(f"diagonal {c} both goes north and east; not an outside decomposition")
        directions[c] = next(iter(chosen))
    return directions


def cutting_strip(diagram: SkewDiagram, ribbons: List[CellSet]) -> Dict[int, Cell]:
    """从 (0, c_min) 出发按走向逐格延伸的带"""
    if diagram.is_empty:
        return {}
    directions = diagonal_directions(diagram, ribbons)
    lo, hi = diagram.min_content, diagram.max_content
    cell = (0, lo)
    strip = {lo: cell}
    for c in range(lo, hi):
        i, j = cell
        cell = (i - 1, j) if directions.get(c, "east") == "north" else (i, j + 1)
        strip[c + 1] = cell
    return strip


def strip_interval(dec: OutsideDecomposition, p: int, q: int) -> StripInterval:
    """θ[p, q]：p = q+1 为空带，p > q+1 或越界为未定义"""
    if p == q + 1:
        return StripInterval(p, q, IntervalKind.EMPTY)
    if p > q + 1 or p not in dec.strip or q not in dec.strip:
        return StripInterval(p, q, IntervalKind.UNDEFINED)
    cells = frozenset(dec.strip[c] for c in range(p, q + 1))
    return StripInterval(p, q, IntervalKind.RIBBON, Ribbon(cells))


def hash_op(dec: OutsideDecomposition, i: int, j: int) -> StripInterval:
    """θ_i # θ_j = θ[p(θ_j), q(θ_i)]"""
    _, q_i = dec.interval(i)
    p_j, _ = dec.interval(j)
    return strip_interval(dec, p_j, q_i)


def is_outside(dec: OutsideDecomposition) -> bool:
    """各带不交、覆盖 D，且每条带的两端分别在 D 的西/南边界与北/东边界上"""
    cells = dec.diagram.cells
    seen = set()
    for ribbon in dec.ribbons:
        if seen & ribbon:
            return False
        seen |= ribbon
        try:
            if not SkewDiagram(ribbon).is_ribbon:
                return False
        except InvalidDiagramError:
            return False
        sw = min(ribbon, key=content)
        ne = max(ribbon, key=content)
        if (sw[0], sw[1] - 1) in cells and (sw[0] + 1, sw[1]) in cells:
            return False
        if (ne[0] - 1, ne[1]) in cells and (ne[0], ne[1] + 1) in cells:
            return False
    if seen != cells:
        return False
    try:
        diagonal_directions(dec.diagram, dec.ribbons)
    except InvalidDiagramError:
        return False
    return True
