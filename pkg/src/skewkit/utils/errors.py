"""
SkewKit 异常定义
作者: XYZ-Algorithm-Team
用途: 区分非法输入、假设不成立与枚举越界，便于命令行映射退出码
"""

from typing import Any, Optional


class SkewKitError(ValueError):
    """所有 SkewKit 输入类错误的基类"""


class InvalidDiagramError(SkewKitError):
    """单元格集合不是斜图，或 μ ⊄ λ"""


class ConnectivityError(InvalidDiagramError):
    """操作要求连通斜图"""


class PlacementError(SkewKitError):
    """W 不在 E 的顶部与底部，或锚点不匹配"""


class HypothesisError(SkewKitError):
    """假设 I–IV 不成立时拒绝构造"""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class EnumerationCapError(SkewKitError):
    """请求规模超过配置上限"""
