"""
复合分解搜索
作者: XYZ-Algorithm-Team
用途: 穷举 F = D ∘_W E 的全部分解，区分平凡 / 非平凡，挑出 W、E 所占对角线最少的极小分解，
     贪心组装不可约分解链并给出等价类规模预测 2^r
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from ..diagrams.enumeration import corner_subdiagrams, enumerate_by_span
from ..diagrams.skew import SkewDiagram, content, straight, sub, sw_corner, translate
from ..utils.errors import EnumerationCapError, InvalidDiagramError, PlacementError
from ..utils.logging_utils import log_performance
from .compose import compose
from .overlap import check_hypotheses
from .placement import WPlacement, empty_placement, find_w_placements

logger = logging.getLogger(__name__)

SINGLE_CELL = straight([1])


@dataclass(frozen=True)
class Factorization:
    """F = D ∘_W E"""
    D: SkewDiagram
    placement: WPlacement
    trivial: bool = False

    @property
    def E(self) -> SkewDiagram:
        return self.placement.E

    @property
    def W(self) -> SkewDiagram:
        return self.placement.W

    @property
    def minimality_key(self) -> Tuple[int, int]:
        """先比 W 占据的对角线数，再比 E"""
        return (self.W.diagonals, self.E.diagonals)

    def to_json(self) -> Dict[str, Any]:
        return {
            "D": self.D.to_json(),
            "E": self.E.to_json(),
            "W": self.W.to_json(),
            "case": self.placement.case,
            "trivial": self.trivial,
        }


@dataclass
class FactorizationResult:
    diagram: SkewDiagram
    trivial: List[Factorization] = field(default_factory=list)
    nontrivial: List[Factorization] = field(default_factory=list)

    @property
    def minimal(self) -> List[Factorization]:
        """所有达到最小键的非平凡分解（可能不止一个）"""
        if not self.nontrivial:
            return []
        best = min(f.minimality_key for f in self.nontrivial)
        return [f for f in self.nontrivial if f.minimality_key == best]

    @property
    def irreducible(self) -> bool:
        return not self.nontrivial

    def to_json(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram.to_json(),
            "trivial": [f.to_json() for f in self.trivial],
            "nontrivial": [f.to_json() for f in self.nontrivial],
            "minimal": [f.to_json() for f in self.minimal],
            "irreducible": self.irreducible,
        }


def trivial_factorizations(f: SkewDiagram) -> List[Factorization]:
    """
    (1) ∘_W F（W 取 F 满足假设 I–IV 的全部放置，含 ∅）与 F ∘_∅ (1)

    第三类平凡分解 ∅ ∘_F E 对任意上下两端都含 F 的 E 成立，E 没有上界，不列出。
    """
    found = [Factorization(D=SINGLE_CELL, placement=empty_placement(f), trivial=True)]
    found.extend(Factorization(D=SINGLE_CELL, placement=pl, trivial=True)
                 for pl in _admissible_placements(f) if not pl.is_empty)
    if f != SINGLE_CELL:
        found.append(Factorization(D=f, placement=empty_placement(SINGLE_CELL), trivial=True))
    return found


@lru_cache(maxsize=256)
def _diagrams_with_span(span: int, max_cells: int) -> tuple:
    return tuple(d for d in enumerate_by_span(span, max_cells=max_cells) if len(d) >= 2)


def _admissible_placements(e: SkewDiagram) -> List[WPlacement]:
    return [pl for pl in find_w_placements(e) if check_hypotheses(pl).overall_I_to_IV]


def _candidate_factors(f: SkewDiagram):
    """F 顶部的连通子斜图 E（2 ≤ |E| < |F|），且其平移也落在 F 底部"""
    for cells in corner_subdiagrams(f.cells, f.ne_cell):
        if not 2 <= len(cells) < len(f):
            continue
        bottom = translate(cells, sub(f.sw_cell, sw_corner(cells)))
        if bottom <= f.cells:
            yield SkewDiagram(cells)


@log_performance("search")
def factorizations(f: SkewDiagram, max_cells: Optional[int] = None) -> FactorizationResult:
    """
    穷举 F = D ∘_W E，D、E 至少两格且 E 真小于 F

    Raises:
        EnumerationCapError: |F| 超过分解搜索上限
    """
    if max_cells is None:
        from ..config import get_factorization_settings
        max_cells = get_factorization_settings().max_cells
    if len(f) > max_cells:
        raise EnumerationCapError(f"|F|={len(f)} exceeds the factorization bound {max_cells}")
    f.require_connected("factorizations")

    result = FactorizationResult(diagram=f, trivial=trivial_factorizations(f))
    for e in _candidate_factors(f):
        for pl in _admissible_placements(e):
            step = content(pl.shift)
            gap = f.content_span - e.content_span
            if step <= 0 or gap <= 0 or gap % step:
                continue
            for d in _diagrams_with_span(gap // step, len(f) - len(e) + 1):
                try:
                    composed = compose(d, e, pl, check=False)
                except (InvalidDiagramError, PlacementError):
                    continue
                if composed == f:
                    result.nontrivial.append(Factorization(D=d, placement=pl))

    result.nontrivial.sort(key=lambda x: (x.minimality_key, x.E.sort_key, x.D.sort_key, sorted(x.placement.ne)))
    logger.debug(f"{f.describe()}: {len(result.nontrivial)} 个非平凡分解")
    return result


@dataclass
class IrreducibleChain:
    """F = (…((E₁ ∘_{W₂} E₂) ∘_{W₃} E₃)…)，steps 自内向外"""
    diagram: SkewDiagram
    base: SkewDiagram
    steps: List[Factorization] = field(default_factory=list)

    @property
    def factors(self) -> List[SkewDiagram]:
        return [self.base] + [step.E for step in self.steps]

    @property
    def asymmetric_factors(self) -> int:
        """E_i ≠ E_i* 的因子个数 r"""
        return sum(1 for e in self.factors if e != e.rotate180())

    @property
    def predicted_class_size(self) -> int:
        return 2 ** self.asymmetric_factors

    def to_json(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram.to_json(),
            "factors": [e.to_json() for e in self.factors],
            "placements": [step.W.to_json() for step in self.steps],
            "r": self.asymmetric_factors,
            "predicted_class_size": self.predicted_class_size,
        }


def irreducible_factorization(f: SkewDiagram, max_cells: Optional[int] = None) -> IrreducibleChain:
    """逐步取第一个极小分解 F = D ∘_W E，再分解 D，直到只剩平凡分解"""
    steps: List[Factorization] = []
    current = f
    while True:
        minimal = factorizations(current, max_cells).minimal
        if not minimal:
            break
        chosen = minimal[0]
        steps.insert(0, chosen)
        current = chosen.D
    return IrreducibleChain(diagram=f, base=current, steps=steps)


def predicted_class_size(f: SkewDiagram, max_cells: Optional[int] = None) -> int:
    return irreducible_factorization(f, max_cells).predicted_class_size
