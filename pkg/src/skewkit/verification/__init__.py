"""
验证套件模块
作者: XYZ-Algorithm-Team
用途: 已发表算例语料与随机 / 穷举性质校验
"""

from .suites import (
    SUITES,
    CheckResult,
    SuiteContext,
    SuiteResult,
    load_corpus,
    run_suite,
    sample_identity_triples,
)

__all__ = [
    "SUITES", "CheckResult", "SuiteContext", "SuiteResult",
    "load_corpus", "run_suite", "sample_identity_triples",
]
