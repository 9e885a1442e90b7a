"""
斜等价模块
作者: XYZ-Algorithm-Team
用途: 等价类穷举、类内必要条件检查与等价定理核验
"""

from .classify import (
    EquivalenceClass,
    InvariantCheck,
    check_class_invariants,
    class_size_histogram,
    classification_report,
    classify,
    invariants_record,
    nontrivial_classes,
    power_of_two_findings,
)
from .theorems import (
    TheoremCheck,
    transpose_equivalences,
    verify_equivalence_theorem,
    verify_rotation_equivalence,
    verify_transpose_prop,
)

__all__ = [
    "EquivalenceClass", "InvariantCheck", "classify", "check_class_invariants",
    "class_size_histogram", "classification_report", "invariants_record",
    "nontrivial_classes", "power_of_two_findings",
    "TheoremCheck", "verify_equivalence_theorem", "verify_rotation_equivalence",
    "transpose_equivalences", "verify_transpose_prop",
]
