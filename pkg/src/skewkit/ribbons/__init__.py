"""
带状分解模块
作者: XYZ-Algorithm-Team
用途: 外分解、切割带、Hamel-Goulden 行列式与 Sylvester 恒等式
"""

from .decomposition import (
    DecompositionKind,
    IntervalKind,
    OutsideDecomposition,
    StripInterval,
    cutting_strip,
    decompose,
    diagonal_directions,
    hash_op,
    is_outside,
    jacobi_trudi_decomposition,
    northwest_decomposition,
    southeast_decomposition,
    strip_interval,
)
from .hamel_goulden import HamelGouldenReport, check_hamel_goulden, hamel_goulden
from .sylvester import sylvester_check, sylvester_matrix

__all__ = [
    "DecompositionKind", "IntervalKind", "OutsideDecomposition", "StripInterval",
    "southeast_decomposition", "northwest_decomposition", "jacobi_trudi_decomposition",
    "decompose", "cutting_strip", "diagonal_directions", "strip_interval", "hash_op", "is_outside",
    "hamel_goulden", "check_hamel_goulden", "HamelGouldenReport",
    "sylvester_check", "sylvester_matrix",
]
