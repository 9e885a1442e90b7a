"""
Sylvester 行列式恒等式
作者: XYZ-Algorithm-Team
用途: 在任意交换环上核验 det(M)·det(M[S,S])^{n−|S|−1} = det(syl(M, S))
"""

from typing import Any, Callable, List, Optional, Sequence

from ..schur.determinant import determinant, integer_determinant, submatrix
from ..schur.poly import SchurPoly

Matrix = Sequence[Sequence[Any]]


def _default_det(matrix: Matrix) -> Callable[[Matrix], Any]:
    flat = [x for row in matrix for x in row]
    if all(isinstance(x, int) for x in flat):
        return integer_determinant
    if any(isinstance(x, SchurPoly) for x in flat):
        return lambda m: determinant(m, SchurPoly.zero(), SchurPoly.one())
    return lambda m: determinant(m, 0, 1)


def sylvester_matrix(matrix: Matrix, subset: Sequence[int],
                     det: Callable[[Matrix], Any]) -> List[List[Any]]:
    """syl(M, S)_{i,j} = det M[S∪{i}, S∪{j}]，i, j ∉ S，S 在前"""
    n = len(matrix)
    base = list(subset)
    rest = [k for k in range(n) if k not in set(base)]
    return [[det(submatrix(matrix, base + [i], base + [j])) for j in rest] for i in rest]


def sylvester_check(matrix: Matrix, subset: Sequence[int],
                    det: Optional[Callable[[Matrix], Any]] = None) -> bool:
    """
    核验 Sylvester 恒等式

    Args:
        matrix: 交换环上的方阵
        subset: 指标集 S，须满足 |S| < n
        det: 行列式函数，默认整数矩阵用 Bareiss，其余用余子式展开
    """
    n = len(matrix)
    subset = sorted(set(subset))
    if any(not 0 <= k < n for k in subset):
        raise ValueError(f"index subset {subset} out of range for a {n}x{n} matrix")
    if len(subset) >= n:
        raise ValueError("subset must leave at least one index outside")
    det = det or _default_det(matrix)

    left = det(matrix)
    pivot = det(submatrix(matrix, subset, subset))
    for _ in range(n - len(subset) - 1):
        left = left * pivot
    right = det(sylvester_matrix(matrix, subset, det))
    return left == right
