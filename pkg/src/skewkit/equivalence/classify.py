"""
斜等价类穷举
作者: XYZ-Algorithm-Team
用途: 枚举不超过 n 格的连通斜图，按 Schur 展开指纹分组为等价类，检查类内必要条件并报告 2^r 猜想的反例
"""

import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from joblib import Parallel, delayed

from ..diagrams.enumeration import enumerate_connected
from ..diagrams.skew import SkewDiagram
from ..schur.algebra import cache_stats, skew_schur
from ..schur.poly import SchurPoly
from ..utils.logging_utils import ClassificationLog, PerformanceTimer, get_logger

logger = logging.getLogger(__name__)


def invariants_record(d: SkewDiagram) -> Dict[str, Any]:
    """等价类内必须一致的量"""
    return {
        "cells": len(d),
        "rows": d.rows,
        "row_lengths": sorted(d.row_lengths, reverse=True),
        "nw_body": len(d.nw_body()),
    }


@dataclass
class EquivalenceClass:
    """指纹相同的连通斜图"""
    members: List[SkewDiagram]
    fingerprint: SchurPoly

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def cells(self) -> int:
        return len(self.members[0])

    @property
    def invariants_record(self) -> Dict[str, Any]:
        return invariants_record(self.members[0])

    @property
    def is_power_of_two(self) -> bool:
        return self.size & (self.size - 1) == 0

    @property
    def is_rotation_orbit(self) -> bool:
        """成员全部落在 {D, D*} 之内"""
        first = self.members[0]
        return set(self.members) <= {first, first.rotate180()}

    def to_json(self) -> Dict[str, Any]:
        return {
            "members": [m.to_json() for m in self.members],
            "fingerprint": self.fingerprint.to_json(),
            "invariants_record": self.invariants_record,
            "size": self.size,
            "power_of_two": self.is_power_of_two,
        }


@dataclass
class InvariantCheck:
    cls: EquivalenceClass
    violations: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def _fingerprint(d: SkewDiagram) -> str:
    return skew_schur(d).fingerprint()


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        from ..config import get_compute_settings
        workers = get_compute_settings().workers
    return workers


def classify(n: int, workers: Optional[int] = None, cap: Optional[int] = None) -> List[EquivalenceClass]:
    """
    将 1..n 格的连通斜图按 s_D 分组

    Args:
        n: 最大单元格数
        workers: joblib 并行进程数，1 为串行，-1 为全部核心
        cap: 枚举上限，默认取配置

    Returns:
        按指纹序列化排序的等价类列表，类内成员按 (λ, μ) 排序
    """
    workers = _resolve_workers(workers)
    diagrams: List[SkewDiagram] = []
    for m in range(1, n + 1):
        diagrams.extend(enumerate_connected(m, cap))

    started = time.time()
    with PerformanceTimer(get_logger(), "classify", {"items": len(diagrams)}):
        if workers == 1:
            fingerprints = [_fingerprint(d) for d in diagrams]
        else:
            fingerprints = Parallel(n_jobs=workers)(delayed(_fingerprint)(d) for d in diagrams)

    groups: Dict[str, List[SkewDiagram]] = {}
    for d, fp in zip(diagrams, fingerprints):
        groups.setdefault(fp, []).append(d)

    classes = [
        EquivalenceClass(
            members=sorted(members, key=lambda d: d.sort_key),
            fingerprint=SchurPoly.from_json(json.loads(fp)),
        )
        for fp, members in sorted(groups.items())
    ]

    findings = power_of_two_findings(classes)
    get_logger().log_classification(ClassificationLog(
        max_cells=n,
        timestamp=started,
        duration_ms=(time.time() - started) * 1000,
        diagrams=len(diagrams),
        classes=len(classes),
        workers=workers,
        nontrivial_classes=len(nontrivial_classes(classes)),
        findings=findings or None,
    ))
    logger.debug(f"分类完成: {len(diagrams)} 个斜图, {len(classes)} 个等价类, 缓存 {cache_stats()}")
    return classes


def check_class_invariants(cls: EquivalenceClass) -> InvariantCheck:
    """格数、行数、行长多重集与 |nw-body| 在类内一致"""
    check = InvariantCheck(cls=cls)
    reference = invariants_record(cls.members[0])
    for member in cls.members[1:]:
        record = invariants_record(member)
        for key, value in reference.items():
            if record[key] != value:
                check.violations.append(
                    f"{key} differs: {cls.members[0].describe()} has {value}, "
                    f"{member.describe()} has {record[key]}"
                )
    if check.violations:
        logger.error(f"等价类不变量不一致: {check.violations}")
    return check


def nontrivial_classes(classes: List[EquivalenceClass]) -> List[EquivalenceClass]:
    """不能由旋转解释的等价类"""
    return [c for c in classes if not c.is_rotation_orbit]


def power_of_two_findings(classes: List[EquivalenceClass]) -> List[Dict[str, Any]]:
    return [
        {"size": c.size, "members": [m.to_json() for m in c.members]}
        for c in classes if not c.is_power_of_two
    ]


def class_size_histogram(classes: List[EquivalenceClass]) -> Dict[int, int]:
    return dict(sorted(Counter(c.size for c in classes).items()))


def classification_report(classes: List[EquivalenceClass], max_cells: int) -> Dict[str, Any]:
    invariant_failures = [check for check in map(check_class_invariants, classes) if not check.holds]
    return {
        "max_cells": max_cells,
        "diagrams": sum(c.size for c in classes),
        "class_count": len(classes),
        "size_histogram": {str(k): v for k, v in class_size_histogram(classes).items()},
        "classes": [c.to_json() for c in classes],
        "nontrivial": [c.to_json() for c in nontrivial_classes(classes)],
        "findings": power_of_two_findings(classes),
        "invariant_violations": [v for check in invariant_failures for v in check.violations],
    }
