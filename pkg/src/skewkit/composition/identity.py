"""
复合映射与主恒等式
作者: XYZ-Algorithm-Team
用途: s_D ∘_W s_E 的 Jacobi-Trudi 代换、增强西北分解与符号，
     以及 s_{D∘_W E}·s_{W̄}^{|D↑|}·s_{Ō}^{|nw-body(D)|} = ± s_D ∘_W s_E 的核验
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..diagrams.skew import Cell, CellSet, SkewDiagram, content, se_cells
from ..ribbons.decomposition import northwest_decomposition
from ..schur.determinant import determinant
from ..schur.hbasis import make_ring
from ..utils.errors import HypothesisError
from .compose import amalg_power, compose
from .overlap import HypothesisReport, check_hypotheses
from .placement import WPlacement

logger = logging.getLogger(__name__)


def jacobi_trudi_lengths(d: SkewDiagram) -> List[List[int]]:
    """Jacobi-Trudi 矩阵中 h 的下标 λ_i − μ_j − i + j"""
    lam, mu = d.lam, d.mu
    n = len(lam)
    return [[lam[i] - mu.part(j) - i + j for j in range(n)] for i in range(n)]


def _resolve_basis(basis: Optional[str]) -> str:
    if basis is None:
        from ..config import get_compute_settings
        basis = get_compute_settings().identity_basis
    return basis


def schur_compose(d: SkewDiagram, e: SkewDiagram, pl: WPlacement, ring=None,
                  basis: Optional[str] = None):
    """
    s_D ∘_W s_E：把 s_D 的 Jacobi-Trudi 矩阵中 h_k 换成 s_{E^{⊔_W k}}

    k = 0 取 s_W，k < 0 取 0；D = ∅ 时为 s_W。
    """
    if d.is_empty:
        ring = ring or make_ring(_resolve_basis(basis), len(pl.W))
        return ring.skew(pl.W)

    lengths = jacobi_trudi_lengths(d)
    powers = {k: amalg_power(e, pl, k) for row in lengths for k in row if k >= 0}
    if ring is None:
        degree = max([len(shape) for shape in powers.values()] + [1])
        ring = make_ring(_resolve_basis(basis), degree)
    matrix = [[ring.skew(powers[k]) if k >= 0 else ring.zero for k in row] for row in lengths]
    return determinant(matrix, ring.zero, ring.one)


# ---------------------------------------------------------------------------
# 符号
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnhancedRibbon:
    """增强西北分解中的一条带；虚带没有单元格，记录其所在的格"""
    p: int
    q: int
    cells: CellSet
    imaginary_at: Optional[Cell] = None

    @property
    def is_empty(self) -> bool:
        return not self.cells

    def to_json(self) -> Dict[str, Any]:
        payload = {"p": self.p, "q": self.q, "size": len(self.cells)}
        if self.imaginary_at is not None:
            payload["imaginary_at"] = list(self.imaginary_at)
        return payload


def enhanced_nw_decomposition(d: SkewDiagram) -> List[EnhancedRibbon]:
    """
    西北分解加上虚带，按 q 递减排列

    同一西北带上 d 位于 d' 正南且二者都在 se(D) 中时，在 d 处补一条
    q = c(d)、p = c(d)+1 的空带。
    """
    dec = northwest_decomposition(d)
    ribbons = []
    owner: Dict[Cell, int] = {}
    for k, cells in enumerate(dec.ribbons):
        p, q = dec.interval(k)
        ribbons.append(EnhancedRibbon(p=p, q=q, cells=cells))
        owner.update((c, k) for c in cells)

    border = se_cells(d.cells)
    for cell in sorted(d.cells):
        north = (cell[0] - 1, cell[1])
        if north in owner and owner[north] == owner[cell] and cell in border and north in border:
            c = content(cell)
            ribbons.append(EnhancedRibbon(p=c + 1, q=c, cells=frozenset(), imaginary_at=cell))

    ribbons.sort(key=lambda r: (-r.q, r.p))
    if len(ribbons) != d.rows:
        logger.warning(f"增强分解带数 {len(ribbons)} 与行数 {d.rows} 不一致: {d.describe()}")
    return ribbons


def sign_of(d: SkewDiagram) -> int:
    """(−1)^{逆序数}：按 q 递减排列后 p_i < p_j (i < j) 的对数"""
    if d.is_empty:
        return 1
    ps = [r.p for r in enhanced_nw_decomposition(d)]
    inversions = sum(1 for i in range(len(ps)) for j in range(i + 1, len(ps)) if ps[i] < ps[j])
    return -1 if inversions % 2 else 1


def expected_sign(d: SkewDiagram, case: Optional[str]) -> int:
    """情形 a、b 恒为 +1；c 取 sign(D)；d 经旋转取 sign(D*)"""
    if case in ("a", "b") or d.is_empty:
        return 1
    if case == "c":
        return sign_of(d)
    return sign_of(d.rotate180())


# ---------------------------------------------------------------------------
# 主恒等式
# ---------------------------------------------------------------------------

@dataclass
class MainIdentityResult:
    """主恒等式核验结果"""
    D: SkewDiagram
    placement: WPlacement
    composed: SkewDiagram
    hypotheses: HypothesisReport
    basis: str
    sign: Optional[int]
    expected_sign: int
    lhs: Any = None
    rhs: Any = None

    @property
    def holds(self) -> bool:
        return self.sign is not None

    @property
    def sign_consistent(self) -> bool:
        return self.sign == self.expected_sign

    def to_json(self) -> Dict[str, Any]:
        return {
            "D": self.D.to_json(),
            "E": self.placement.E.to_json(),
            "W": self.placement.W.to_json(),
            "case": self.placement.case,
            "composed": self.composed.to_json(),
            "basis": self.basis,
            "holds": self.holds,
            "sign": self.sign,
            "expected_sign": self.expected_sign,
            "sign_consistent": self.sign_consistent,
            "hypothesis_V": self.hypotheses.h5,
        }


def verify_main_identity(d: SkewDiagram, e: SkewDiagram, pl: WPlacement,
                         basis: Optional[str] = None) -> MainIdentityResult:
    """
    判定左边等于 +右边、−右边或都不等

    Raises:
        HypothesisError: 假设 I–IV 不成立
    """
    report = check_hypotheses(pl)
    if not report.overall_I_to_IV:
        raise HypothesisError(f"hypotheses {', '.join(report.failed())} fail for {pl.describe()}", report)
    basis = _resolve_basis(basis)

    composed = compose(d, e, pl, check=False)
    shapes = report.overlap
    up, body = d.up_body_size(), len(d.nw_body())

    sizes = [len(composed), len(shapes.barW), len(shapes.barO), len(pl.W), 1]
    if not d.is_empty:
        sizes += [len(amalg_power(e, pl, k)) for row in jacobi_trudi_lengths(d) for k in row if k > 0]
    ring = make_ring(basis, max(sizes))

    lhs = ring.skew(composed) * ring.skew(shapes.barW) ** up * ring.skew(shapes.barO) ** body
    rhs = schur_compose(d, e, pl, ring=ring)
    if lhs == rhs:
        sign = 1
    elif lhs == -rhs:
        sign = -1
    else:
        sign = None

    result = MainIdentityResult(
        D=d, placement=pl, composed=composed, hypotheses=report, basis=basis,
        sign=sign, expected_sign=expected_sign(d, pl.case), lhs=lhs, rhs=rhs,
    )
    if result.holds and not result.sign_consistent:
        logger.warning(f"符号与预测不一致: D={d.describe()} {pl.describe()} sign={sign}")
    return result
