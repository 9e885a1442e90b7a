"""
整数分拆
作者: XYZ-Algorithm-Team
用途: Schur 基的索引；元组子类，可直接作为字典键与 JSON 列表使用
"""

import operator
from typing import Iterable

from ..utils.errors import InvalidDiagramError


class Partition(tuple):
    """弱递减正整数序列，空序列是 0 的唯一分拆"""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        try:
            values = [operator.index(p) for p in parts]
        except TypeError as e:
            raise InvalidDiagramError(f"partition must be a list of integers, got {parts!r}") from e
        # 允许末尾补零，统一去掉
        while values and values[-1] == 0:
            values.pop()
        for index, part in enumerate(values):
            if part <= 0:
                raise InvalidDiagramError(f"partition parts must be positive: {values}")
            if index and values[index - 1] < part:
                raise InvalidDiagramError(f"partition must be weakly decreasing: {values}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, index: int) -> int:
        """第 index 个部分（0 起），越界视为 0"""
        return self[index] if index < len(self) else 0

    def conjugate(self) -> 'Partition':
        """共轭分拆 λ'"""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > col) for col in range(self[0]))

    def contains(self, other: Iterable[int]) -> bool:
        """μ ⊆ λ 按分量比较"""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def to_list(self) -> list:
        return list(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(parts) -> Partition:
    """接受 Partition、列表或元组"""
    return parts if isinstance(parts, Partition) else Partition(parts)


def partitions(n: int, largest: int = None):
    """n 的全部分拆，按字典序递减"""
    largest = n if largest is None else largest
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))
