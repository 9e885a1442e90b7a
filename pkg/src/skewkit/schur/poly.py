"""
Schur 基多项式
作者: XYZ-Algorithm-Team
用途: 以 Schur 函数为基的整系数对称函数；排序后的 JSON 即精确指纹
"""

import json
from types import MappingProxyType
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from ..diagrams.partition import Partition, as_partition


class SchurPoly:
    """有限支撑映射 Partition → 非零整数"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Any, int]], None] = None):
        collected: Dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for parts, coeff in items:
            key = as_partition(parts)
            collected[key] = collected.get(key, 0) + int(coeff)
        self._terms = {k: v for k, v in collected.items() if v != 0}
        self._hash = None

    # --- 构造 ----------------------------------------------------------------

    @classmethod
    def zero(cls) -> 'SchurPoly':
        return cls()

    @classmethod
    def one(cls) -> 'SchurPoly':
        return cls({Partition(): 1})

    @classmethod
    def schur(cls, parts: Iterable[int], coeff: int = 1) -> 'SchurPoly':
        return cls({as_partition(parts): coeff})

    @classmethod
    def from_json(cls, payload: List[Dict[str, Any]]) -> 'SchurPoly':
        return cls((entry["partition"], entry["coeff"]) for entry in payload)

    # --- 访问 ----------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    def coeff(self, parts: Iterable[int]) -> int:
        return self._terms.get(as_partition(parts), 0)

    def items(self):
        return self._terms.items()

    def support(self) -> List[Partition]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set:
        return {p.size for p in self._terms}

    def is_homogeneous(self, degree: int = None) -> bool:
        degrees = self.degrees()
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def is_schur_positive(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # --- 相等 ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SchurPoly.one() * other if other else SchurPoly()
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- 算术 ----------------------------------------------------------------

    def __add__(self, other: 'SchurPoly') -> 'SchurPoly':
        if isinstance(other, int):
            other = SchurPoly({Partition(): other})
        if not isinstance(other, SchurPoly):
            return NotImplemented
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, 0) + v
        return SchurPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> 'SchurPoly':
        return SchurPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: 'SchurPoly') -> 'SchurPoly':
        if isinstance(other, int):
            other = SchurPoly({Partition(): other})
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'SchurPoly':
        return (-self) + other

    def __mul__(self, other) -> 'SchurPoly':
        if isinstance(other, int):
            return SchurPoly({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, SchurPoly):
            return NotImplemented
        from .algebra import multiply
        return multiply(self, other)

    def __rmul__(self, other) -> 'SchurPoly':
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> 'SchurPoly':
        if exponent < 0:
            raise ValueError("negative powers are not defined for SchurPoly")
        result, base = SchurPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # --- 编码 ----------------------------------------------------------------

    def to_json(self) -> List[Dict[str, Any]]:
        """按分拆字典序排序的 [{"partition": [...], "coeff": n}]"""
        return [{"partition": list(p), "coeff": self._terms[p]} for p in sorted(self._terms)]

    def fingerprint(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def first_difference(self, other: 'SchurPoly'):
        """第一个系数不同的分拆（按字典序），相等时返回 None"""
        for p in sorted(set(self._terms) | set(other._terms)):
            if self.coeff(p) != other.coeff(p):
                return p, self.coeff(p), other.coeff(p)
        return None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for p in sorted(self._terms):
            c = self._terms[p]
            base = f"s{list(p)}" if p else "1"
            if c == 1:
                chunks.append(base)
            elif c == -1:
                chunks.append(f"-{base}")
            else:
                chunks.append(f"{c}*{base}")
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SchurPoly({self})"
