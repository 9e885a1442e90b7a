"""
Hamel-Goulden 行列式
作者: XYZ-Algorithm-Team
用途: 由外分解构造矩阵 (s_{θ_i # θ_j})，求行列式并与 s_D 比对
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..diagrams.skew import SkewDiagram
from ..schur.algebra import skew_schur
from ..schur.determinant import det_schur, determinant
from ..schur.hbasis import SchurBasisRing
from ..schur.poly import SchurPoly
from ..utils.logging_utils import LogCategory, log_errors
from .decomposition import (
    DecompositionKind,
    OutsideDecomposition,
    StripInterval,
    decompose,
    hash_op,
)

logger = logging.getLogger(__name__)


def hamel_goulden_intervals(dec: OutsideDecomposition) -> List[List[StripInterval]]:
    m = len(dec)
    return [[hash_op(dec, i, j) for j in range(m)] for i in range(m)]


def hamel_goulden(diagram: SkewDiagram, dec: OutsideDecomposition,
                  ring=None) -> Tuple[List[List[Any]], Any]:
    """
    返回 (矩阵, 行列式)

    Args:
        diagram: D
        dec: D 的外分解
        ring: 对称函数环实现，默认 Schur 基
    """
    if dec.diagram != diagram:
        raise ValueError("decomposition does not belong to this diagram")
    ring = ring or SchurBasisRing()
    intervals = hamel_goulden_intervals(dec)
    matrix = [[entry.value(ring) for entry in row] for row in intervals]
    if isinstance(ring, SchurBasisRing):
        return matrix, det_schur(matrix)
    return matrix, determinant(matrix, ring.zero, ring.one)


@dataclass
class HamelGouldenReport:
    """Hamel-Goulden 校验结果"""
    diagram: SkewDiagram
    decomposition: OutsideDecomposition
    intervals: List[List[StripInterval]]
    determinant: SchurPoly
    expected: SchurPoly

    @property
    def holds(self) -> bool:
        return self.determinant == self.expected

    def to_json(self, show_matrix: bool = False) -> Dict:
        payload = {
            "diagram": self.diagram.to_json(),
            "kind": self.decomposition.kind.value,
            "ribbons": len(self.decomposition),
            "intervals": [list(iv) for iv in self.decomposition.intervals],
            "holds": self.holds,
            "determinant": self.determinant.to_json(),
        }
        if show_matrix:
            ring = SchurBasisRing()
            payload["matrix"] = [
                [dict(entry.to_json(), expansion=entry.value(ring).to_json()) for entry in row]
                for row in self.intervals
            ]
        return payload


@log_errors(LogCategory.DECOMPOSITION)
def check_hamel_goulden(diagram: SkewDiagram, kind="nw") -> HamelGouldenReport:
    dec = decompose(diagram, DecompositionKind.parse(kind))
    intervals = hamel_goulden_intervals(dec)
    _, det = hamel_goulden(diagram, dec)
    return HamelGouldenReport(
        diagram=diagram,
        decomposition=dec,
        intervals=intervals,
        determinant=det,
        expected=skew_schur(diagram),
    )
