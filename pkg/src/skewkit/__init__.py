"""
SkewKit
作者: XYZ-Algorithm-Team
用途: 斜 Schur 函数的精确展开、带状分解行列式、斜图 W-拼接复合与斜等价分类
"""

__version__ = "0.1.0"

from .diagrams import SkewDiagram, make_skew, straight
from .schur import SchurPoly, skew_schur
from .composition import compose, find_w_placements, place_w, verify_main_identity
from .equivalence import classify

__all__ = [
    "SkewDiagram", "make_skew", "straight",
    "SchurPoly", "skew_schur",
    "compose", "find_w_placements", "place_w", "verify_main_identity",
    "classify",
]
