"""
W-拼接复合模块
作者: XYZ-Algorithm-Team
用途: W 放置、拼接与点积、D ∘_W E、重叠形状与假设、主恒等式、复合分解
"""

from .placement import (
    CASES,
    WPlacement,
    attachment_case,
    empty_placement,
    find_w_placements,
    place_w,
    placement_from_cells,
    placement_from_marked,
    placement_from_spec,
)
from .overlap import HypothesisReport, OverlapShapes, check_hypotheses, overlap_shapes
from .compose import amalg_power, amalgamate, compose, compose_southeast, dot_candidates, dot_compose
from .identity import (
    EnhancedRibbon,
    MainIdentityResult,
    enhanced_nw_decomposition,
    expected_sign,
    jacobi_trudi_lengths,
    schur_compose,
    sign_of,
    verify_main_identity,
)
from .factorization import (
    Factorization,
    FactorizationResult,
    IrreducibleChain,
    factorizations,
    irreducible_factorization,
    predicted_class_size,
)

__all__ = [
    "CASES", "WPlacement", "attachment_case", "empty_placement", "find_w_placements", "place_w",
    "placement_from_cells", "placement_from_marked", "placement_from_spec",
    "HypothesisReport", "OverlapShapes", "check_hypotheses", "overlap_shapes",
    "amalgamate", "amalg_power", "dot_candidates", "dot_compose", "compose", "compose_southeast",
    "EnhancedRibbon", "MainIdentityResult", "enhanced_nw_decomposition", "sign_of", "expected_sign",
    "jacobi_trudi_lengths",
    "schur_compose", "verify_main_identity",
    "Factorization", "FactorizationResult", "IrreducibleChain",
    "factorizations", "irreducible_factorization", "predicted_class_size",
]
