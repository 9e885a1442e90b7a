"""
Schur 基运算
作者: XYZ-Algorithm-Team
用途: 斜 Schur 展开、乘法、ω 对合；LR 展开结果按 (λ, μ) 与有序 (μ, ν) 缓存
"""

import logging
from functools import lru_cache
from typing import Dict

from ..diagrams.partition import Partition
from ..diagrams.skew import SkewDiagram, components
from .lr import get_backend
from .poly import SchurPoly

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _skew_terms(outer: Partition, inner: Partition) -> tuple:
    expansion = get_backend().skew(outer, inner)
    return tuple(sorted(expansion.items()))


@lru_cache(maxsize=None)
def _product_terms(first: Partition, second: Partition) -> tuple:
    """s_μ·s_ν 作为两个分拆的不交并斜图展开"""
    if not first:
        return ((second, 1),)
    if not second:
        return ((first, 1),)
    shift = second[0]
    outer = Partition([p + shift for p in first] + list(second))
    inner = Partition([shift] * len(first))
    return _skew_terms(outer, inner)


def clear_caches():
    _skew_terms.cache_clear()
    _product_terms.cache_clear()


def cache_stats() -> Dict[str, int]:
    skew_info = _skew_terms.cache_info()
    product_info = _product_terms.cache_info()
    return {
        "cache_hits": skew_info.hits + product_info.hits,
        "cache_misses": skew_info.misses + product_info.misses,
    }


def schur(parts) -> SchurPoly:
    return SchurPoly.schur(parts)


def skew_schur(diagram: SkewDiagram) -> SchurPoly:
    """
    s_D 的 Schur 展开

    不连通时按连通分支分别展开再相乘。
    """
    if diagram.is_empty:
        return SchurPoly.one()
    parts = components(diagram.cells)
    if len(parts) == 1:
        return SchurPoly(dict(_skew_terms(diagram.lam, diagram.mu)))
    result = SchurPoly.one()
    for part in parts:
        piece = SkewDiagram(part)
        result = multiply(result, SchurPoly(dict(_skew_terms(piece.lam, piece.mu))))
    return result


def multiply(f: SchurPoly, g: SchurPoly) -> SchurPoly:
    """双线性扩展 s_μ·s_ν = Σ c^λ_{μν} s_λ"""
    if not f or not g:
        return SchurPoly.zero()
    acc: Dict[Partition, int] = {}
    for mu, a in f.items():
        for nu, b in g.items():
            first, second = (mu, nu) if mu <= nu else (nu, mu)
            for lam, c in _product_terms(first, second):
                acc[lam] = acc.get(lam, 0) + a * b * c
    return SchurPoly(acc)


def omega(f: SchurPoly) -> SchurPoly:
    """s_λ ↦ s_{λ'}"""
    return SchurPoly({p.conjugate(): c for p, c in f.items()})
