"""
等价定理核验
作者: XYZ-Algorithm-Team
用途: 由 s_D = s_{D'} 构造等价 D∘_W E ∼ D'∘_W E ∼ D∘_{W*} E*；转置等价扫描与转置命题；D ∼ D*
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..composition.compose import compose
from ..composition.overlap import check_hypotheses
from ..composition.placement import WPlacement
from ..diagrams.skew import SkewDiagram
from ..schur.algebra import skew_schur
from ..utils.errors import SkewKitError
from .classify import EquivalenceClass, classify

logger = logging.getLogger(__name__)

HOLDS = "holds"
FAILS = "fails"
PRECONDITION = "precondition-failed"


@dataclass
class TheoremCheck:
    """前提不成立与结论不成立分开报告"""
    status: str
    diagrams: Dict[str, SkewDiagram] = field(default_factory=dict)
    reasons: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_json(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "diagrams": {k: v.to_json() for k, v in self.diagrams.items()},
            "reasons": self.reasons,
        }


def verify_rotation_equivalence(d: SkewDiagram) -> bool:
    """s_D = s_{D*}"""
    return skew_schur(d) == skew_schur(d.rotate180())


def verify_equivalence_theorem(d: SkewDiagram, d_prime: SkewDiagram, e: SkewDiagram,
                               pl: WPlacement) -> TheoremCheck:
    """
    前提：s_D = s_{D'} 且放置满足假设 I–V
    结论：D'∘_W E ∼ D∘_W E ∼ D∘_{W*} E*
    """
    reasons = []
    if skew_schur(d) != skew_schur(d_prime):
        reasons.append(f"{d.describe()} and {d_prime.describe()} are not skew-equivalent")
    report = check_hypotheses(pl)
    if not report.overall_I_to_V:
        reasons.append(f"hypotheses {', '.join(report.failed())} fail for {pl.describe()}")
    if reasons:
        return TheoremCheck(status=PRECONDITION, reasons=reasons)

    rotated = pl.rotated()
    try:
        diagrams = {
            "D∘E": compose(d, e, pl),
            "D'∘E": compose(d_prime, e, pl),
            "D∘E*": compose(d, rotated.E, rotated),
        }
    except SkewKitError as exc:
        return TheoremCheck(status=PRECONDITION, reasons=[str(exc)])

    expansions = {name: skew_schur(f) for name, f in diagrams.items()}
    reference = expansions["D∘E"]
    failures = [f"s_{{{name}}} differs from s_{{D∘E}}" for name, s in expansions.items() if s != reference]
    if failures:
        logger.error(f"等价定理不成立: D={d.describe()} D'={d_prime.describe()} {pl.describe()}")
    return TheoremCheck(status=FAILS if failures else HOLDS, diagrams=diagrams, reasons=failures)


def transpose_equivalences(n: int, classes: Optional[List[EquivalenceClass]] = None) -> List[SkewDiagram]:
    """不超过 n 格、满足 F ∼ Fᵗ 且 F ≠ Fᵗ 的全部 F"""
    classes = classes if classes is not None else classify(n)
    found = []
    for cls in classes:
        if cls.cells > n:
            continue
        members = set(cls.members)
        found.extend(f for f in cls.members if f != f.transpose() and f.transpose() in members)
    return sorted(found, key=lambda f: (len(f), f.sort_key))


def verify_transpose_prop(d: SkewDiagram, e: SkewDiagram, pl: WPlacement) -> TheoremCheck:
    """Eᵗ = E、Wᵗ = W ≠ ∅ 时 (D∘_W E)ᵗ ∼ D∘_W E"""
    reasons = []
    if pl.is_empty:
        reasons.append("W must be non-empty")
    if e != e.transpose():
        reasons.append(f"E={e.describe()} is not self-transpose")
    elif not pl.is_empty:
        flipped = pl.transposed()
        if flipped.sw != pl.sw or flipped.ne != pl.ne:
            reasons.append("W placement is not transpose-invariant")
    if not check_hypotheses(pl).overall_I_to_IV:
        reasons.append("hypotheses I-IV fail")
    if reasons:
        return TheoremCheck(status=PRECONDITION, reasons=reasons)

    f = compose(d, e, pl)
    diagrams = {"F": f, "F^t": f.transpose()}
    if skew_schur(f) == skew_schur(f.transpose()):
        return TheoremCheck(status=HOLDS, diagrams=diagrams)
    return TheoremCheck(status=FAILS, diagrams=diagrams, reasons=["s_F differs from s_{F^t}"])
