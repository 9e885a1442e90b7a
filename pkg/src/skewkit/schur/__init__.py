"""
对称函数运算模块
作者: XYZ-Algorithm-Team
用途: Schur 基精确运算、LR 系数、行列式与独立校验
"""

from .poly import SchurPoly
from .lr import get_backend, lr_coefficient, lr_tableaux_contents, set_backend
from .algebra import cache_stats, clear_caches, multiply, omega, schur, skew_schur
from .oracle import evaluate, monomial_oracle, schur_monomial_coefficients, symmetric_coefficients
from .determinant import det_schur, determinant, integer_determinant
from .hbasis import HBasisRing, SchurBasisRing, h_expand, make_ring

__all__ = [
    "SchurPoly",
    "lr_coefficient", "lr_tableaux_contents", "get_backend", "set_backend",
    "skew_schur", "multiply", "omega", "schur", "clear_caches", "cache_stats",
    "monomial_oracle", "symmetric_coefficients", "schur_monomial_coefficients", "evaluate",
    "determinant", "det_schur", "integer_determinant",
    "HBasisRing", "SchurBasisRing", "make_ring", "h_expand",
]
