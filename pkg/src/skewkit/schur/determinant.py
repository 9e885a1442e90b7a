"""
交换环上的行列式
作者: XYZ-Algorithm-Team
用途: 带子式记忆的余子式展开（SchurPoly、sympy 多项式等任意交换环元素），整数矩阵走 sympy Bareiss
"""

from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from .poly import SchurPoly

Matrix = Sequence[Sequence[Any]]


def determinant(matrix: Matrix, zero: Any, one: Any) -> Any:
    """
    按首行逐次展开，以剩余列元组为键记忆子式

    None 与假值元素视为零并跳过。
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")

    memo: Dict[Tuple[int, ...], Any] = {}

    def minor(columns: Tuple[int, ...]) -> Any:
        if not columns:
            return one
        cached = memo.get(columns)
        if cached is not None:
            return cached
        row = matrix[n - len(columns)]
        total = zero
        for position, col in enumerate(columns):
            entry = row[col]
            if entry is None or not entry:
                continue
            rest = minor(columns[:position] + columns[position + 1:])
            if not rest:
                continue
            term = entry * rest
            total = total - term if position % 2 else total + term
        memo[columns] = total
        return total

    return minor(tuple(range(n)))


def det_schur(matrix: Matrix) -> SchurPoly:
    """SchurPoly 矩阵行列式；None 表示未定义（取零）"""
    return determinant(matrix, SchurPoly.zero(), SchurPoly.one())


def integer_determinant(matrix: Matrix) -> int:
    """sympy 无除法 Bareiss 消元"""
    if not matrix:
        return 1
    return int(sympy.Matrix(matrix).det(method="bareiss"))


def submatrix(matrix: Matrix, rows: Sequence[int], cols: Sequence[int]) -> List[List[Any]]:
    return [[matrix[i][j] for j in cols] for i in rows]


def generic_det(matrix: Matrix, zero: Any = 0, one: Any = 1,
                det: Optional[Callable[[Matrix], Any]] = None) -> Any:
    """整数矩阵用 Bareiss，其余按余子式展开"""
    if det is not None:
        return det(matrix)
    if all(isinstance(x, int) for row in matrix for x in row):
        return integer_determinant(matrix)
    return determinant(matrix, zero, one)
