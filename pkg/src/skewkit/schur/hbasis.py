"""
完全齐次基实现
作者: XYZ-Algorithm-Team
用途: 在 sympy 稀疏多项式环 ZZ[h1..hN] 中以 Jacobi-Trudi 行列式表示斜 Schur 函数，
     h_k 代数无关，因此该环中的相等即对称函数相等
"""

from functools import lru_cache
from typing import Any, Dict, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from ..diagrams.partition import Partition
from ..diagrams.skew import SkewDiagram
from .algebra import skew_schur
from .determinant import determinant
from .poly import SchurPoly

COFACTOR_LIMIT = 10


class HBasisRing:
    """次数不超过 degree 的 h 多项式环"""

    name = "h"

    def __init__(self, degree: int):
        self.degree = max(1, int(degree))
        names = ",".join(f"h{k}" for k in range(1, self.degree + 1))
        self.ring, *gens = ring(names, ZZ)
        self.gens = tuple(gens)
        self.zero = self.ring.zero
        self.one = self.ring.one
        self.domain = self.ring.to_domain()
        self._cache: Dict[Tuple[Partition, Partition], Any] = {}
        self._elementary = [self.one]

    def h(self, k: int):
        if k < 0:
            return self.zero
        if k == 0:
            return self.one
        if k > self.degree:
            raise ValueError(f"h_{k} exceeds ring degree {self.degree}")
        return self.gens[k - 1]

    def e(self, k: int):
        """初等对称函数 e_k，由 Σ (−1)^i e_i h_{k−i} = 0 递推"""
        if k < 0:
            return self.zero
        if k > self.degree:
            raise ValueError(f"e_{k} exceeds ring degree {self.degree}")
        while len(self._elementary) <= k:
            m = len(self._elementary)
            total = self.zero
            for i in range(1, m + 1):
                term = self.h(i) * self._elementary[m - i]
                total = total - term if i % 2 == 0 else total + term
            self._elementary.append(total)
        return self._elementary[k]

    def jacobi_trudi(self, lam: Partition, mu: Partition):
        """
        s_{λ/μ} 的 Jacobi-Trudi 行列式

        行数多于列数时改用对偶形式 det(e_{λ'_i − μ'_j − i + j})，阶数为 λ_1。
        阶数仍超过 COFACTOR_LIMIT 时用 sympy DomainMatrix 的无除法消元。
        """
        key = (lam, mu)
        if key not in self._cache:
            if lam and len(lam) > lam[0]:
                entry, rows, cols = self.e, lam.conjugate(), mu.conjugate()
            else:
                entry, rows, cols = self.h, lam, mu
            n = len(rows)
            matrix = [[entry(rows[i] - cols.part(j) - i + j) for j in range(n)] for i in range(n)]
            if n > COFACTOR_LIMIT:
                self._cache[key] = DomainMatrix(matrix, (n, n), self.domain).det()
            else:
                self._cache[key] = determinant(matrix, self.zero, self.one)
        return self._cache[key]

    def skew(self, diagram: SkewDiagram):
        if diagram.is_empty:
            return self.one
        return self.jacobi_trudi(diagram.lam, diagram.mu)

    def from_schur(self, f: SchurPoly):
        total = self.zero
        for lam, c in f.items():
            total += c * self.jacobi_trudi(lam, Partition())
        return total

    def describe(self, element) -> str:
        return str(element.as_expr())


class SchurBasisRing:
    """Schur 基实现，元素为 SchurPoly"""

    name = "schur"

    def __init__(self, degree: int = 0):
        self.degree = degree
        self.zero = SchurPoly.zero()
        self.one = SchurPoly.one()

    def skew(self, diagram: SkewDiagram) -> SchurPoly:
        return skew_schur(diagram)

    def from_schur(self, f: SchurPoly) -> SchurPoly:
        return f

    def describe(self, element) -> str:
        return str(element)


@lru_cache(maxsize=8)
def h_ring(degree: int) -> HBasisRing:
    return HBasisRing(degree)


def make_ring(basis: str, degree: int):
    """按名称构造对称函数环实现"""
    if basis == "h":
        return h_ring(max(1, degree))
    if basis == "schur":
        return SchurBasisRing(degree)
    raise ValueError(f"unknown basis {basis!r}")


def h_expand(diagram: SkewDiagram, degree: int = None):
    """s_D 在 h 基环中的 Jacobi-Trudi 展开"""
    return h_ring(max(1, degree or len(diagram))).skew(diagram)
