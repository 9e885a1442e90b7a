"""
测试公共夹具
作者: XYZ-Algorithm-Team
用途: 配置与日志单例的隔离、常用斜图
"""

import pytest

from skewkit import config
from skewkit.diagrams import enumerate_connected, make_skew, straight
from skewkit.utils import logging_utils


@pytest.fixture
def settings_env(monkeypatch):
    """设置 SKEWKIT_* 环境变量并重新加载配置"""
    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"SKEWKIT_{key.upper()}", str(value))
        config._settings = None
        logging_utils.reset_logger()
        return config.get_settings()

    yield apply
    config._settings = None
    logging_utils.reset_logger()


@pytest.fixture
def staircase():
    """(4,3,2,1)/(2) = (2,1) ∘_(1) (2,1)"""
    return make_skew([4, 3, 2, 1], [2])


@pytest.fixture
def hook():
    return straight([2, 1])


def diagrams_up_to(n):
    return [d for m in range(1, n + 1) for d in enumerate_connected(m)]
