"""
半标准填充枚举（独立校验）
作者: XYZ-Algorithm-Team
用途: 直接枚举半标准 Young 表得到 s_D 的单项式展开，作为 LR 展开的独立对照
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from ..diagrams.partition import Partition
from ..diagrams.skew import Cell, SkewDiagram, straight
from .poly import SchurPoly

Exponent = Tuple[int, ...]


def _row_major(cells: Iterable[Cell]) -> List[Cell]:
    return sorted(cells)


def monomial_oracle(diagram: SkewDiagram, nvars: int) -> Dict[Exponent, int]:
    """s_D(x_1..x_nvars)：指数向量 → 系数"""
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    cells = _row_major(diagram.cells)
    filling: Dict[Cell, int] = {}
    counts = [0] * nvars
    result: Dict[Exponent, int] = {}

    def place(k: int):
        if k == len(cells):
            key = tuple(counts)
            result[key] = result.get(key, 0) + 1
            return
        i, j = cells[k]
        lower = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        for v in range(lower, nvars + 1):
            filling[(i, j)] = v
            counts[v - 1] += 1
            place(k + 1)
            counts[v - 1] -= 1
        filling.pop((i, j), None)

    place(0)
    return result


def count_fillings(diagram: SkewDiagram, content: Sequence[int]) -> int:
    """内容恰为 content 的半标准填充个数"""
    cells = _row_major(diagram.cells)
    target = list(content)
    if sum(target) != len(cells):
        return 0
    filling: Dict[Cell, int] = {}
    counts = [0] * len(target)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lower = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        total = 0
        for v in range(lower, len(target) + 1):
            if counts[v - 1] >= target[v - 1]:
                continue
            filling[(i, j)] = v
            counts[v - 1] += 1
            total += place(k + 1)
            counts[v - 1] -= 1
        filling.pop((i, j), None)
        return total

    return place(0)


def _partitions_of(n: int, max_parts: int, largest: int = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, max_parts - 1, first):
            yield (first,) + rest


def symmetric_coefficients(diagram: SkewDiagram, nvars: int) -> Dict[Partition, int]:
    """s_D 中单项式 x^α（α 为分拆，至多 nvars 部分）的系数"""
    return {
        Partition(alpha): c
        for alpha in _partitions_of(len(diagram), nvars)
        if (c := count_fillings(diagram, alpha))
    }


@lru_cache(maxsize=None)
def kostka(lam: Partition, alpha: Partition) -> int:
    return count_fillings(straight(lam), alpha)


def schur_monomial_coefficients(f: SchurPoly, nvars: int) -> Dict[Partition, int]:
    """Σ c_λ K_{λα}：SchurPoly 的分拆单项式系数"""
    degrees = f.degrees()
    acc: Dict[Partition, int] = {}
    for n in degrees:
        for alpha in _partitions_of(n, nvars):
            alpha = Partition(alpha)
            total = sum(c * kostka(lam, alpha) for lam, c in f.items() if lam.size == n)
            if total:
                acc[alpha] = total
    return acc


def evaluate(f: SchurPoly, nvars: int) -> Dict[Exponent, int]:
    """SchurPoly 在 nvars 个变量下的完整单项式展开"""
    acc: Dict[Exponent, int] = {}
    for lam, c in f.items():
        if len(lam) > nvars:
            continue
        for exponent, k in monomial_oracle(straight(lam), nvars).items():
            acc[exponent] = acc.get(exponent, 0) + c * k
    return {e: v for e, v in acc.items() if v}
