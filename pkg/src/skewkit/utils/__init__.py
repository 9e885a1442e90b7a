"""
SkewKit 工具模块
作者: XYZ-Algorithm-Team
用途: 异常、日志与编解码工具
"""

from .errors import (
    ConnectivityError,
    EnumerationCapError,
    HypothesisError,
    InvalidDiagramError,
    PlacementError,
    SkewKitError,
)
from .logging_utils import (
    LogCategory,
    LogLevel,
    PerformanceTimer,
    get_logger,
    log_errors,
    log_performance,
)

__all__ = [
    "SkewKitError", "InvalidDiagramError", "ConnectivityError", "PlacementError",
    "HypothesisError", "EnumerationCapError",
    "LogCategory", "LogLevel", "PerformanceTimer", "get_logger", "log_errors", "log_performance",
]
