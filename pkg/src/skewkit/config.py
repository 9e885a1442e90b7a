"""
SkewKit 配置管理模块
作者: XYZ-Algorithm-Team
用途: 集中管理枚举上限、计算后端、语料抽样与日志参数，读取环境变量，提供配置单例
"""

import os
import logging
from typing import Optional, Dict, Any
from pathlib import Path
from dataclasses import dataclass, field

# 自动加载 .env 文件
try:
    from dotenv import load_dotenv
    env_file = Path(__file__).parent.parent.parent / '.env'
    if env_file.exists():
        load_dotenv(env_file)
        logging.info(f"已加载配置文件: {env_file}")
except ImportError:
    logging.debug("python-dotenv 未安装，将使用系统环境变量")

logger = logging.getLogger(__name__)

LR_BACKENDS = ("auto", "native", "lrcalc")
IDENTITY_BASES = ("h", "schur")


@dataclass
class EnumerationSettings:
    """穷举枚举配置"""
    max_cells: int = 12
    hard_limit: int = 16  # 超过该规模的枚举在桌面机器上不可行

    @classmethod
    def from_env(cls) -> 'EnumerationSettings':
        """从环境变量创建枚举配置"""
        return cls(
            max_cells=int(os.getenv('SKEWKIT_MAX_CELLS', '12')),
            hard_limit=int(os.getenv('SKEWKIT_HARD_LIMIT', '16'))
        )


@dataclass
class FactorizationSettings:
    """分解搜索配置"""
    max_cells: int = 14

    @classmethod
    def from_env(cls) -> 'FactorizationSettings':
        """从环境变量创建分解搜索配置"""
        return cls(
            max_cells=int(os.getenv('SKEWKIT_FACTOR_MAX_CELLS', '14'))
        )


@dataclass
class ComputeSettings:
    """计算后端配置"""
    lr_backend: str = "auto"  # auto, native, lrcalc
    workers: int = 1  # -1 表示使用全部核心
    amalgam_copies: int = 5  # 截断无穷拼接时使用的副本数（奇数）
    identity_basis: str = "h"  # h, schur

    @classmethod
    def from_env(cls) -> 'ComputeSettings':
        """从环境变量创建计算配置"""
        return cls(
            lr_backend=os.getenv('SKEWKIT_LR_BACKEND', 'auto').lower(),
            workers=int(os.getenv('SKEWKIT_WORKERS', '1')),
            amalgam_copies=int(os.getenv('SKEWKIT_AMALGAM_COPIES', '5')),
            identity_basis=os.getenv('SKEWKIT_IDENTITY_BASIS', 'h').lower()
        )


@dataclass
class CorpusSettings:
    """随机语料配置"""
    seed: int = 1729
    random_samples: int = 200
    max_d_cells: int = 4
    max_e_cells: int = 8

    @classmethod
    def from_env(cls) -> 'CorpusSettings':
        """从环境变量创建随机语料配置"""
        return cls(
            seed=int(os.getenv('SKEWKIT_SEED', '1729')),
            random_samples=int(os.getenv('SKEWKIT_RANDOM_SAMPLES', '200')),
            max_d_cells=int(os.getenv('SKEWKIT_MAX_D_CELLS', '4')),
            max_e_cells=int(os.getenv('SKEWKIT_MAX_E_CELLS', '8'))
        )


@dataclass
class LoggingSettings:
    """日志配置"""
    level: str = "INFO"
    console_level: str = "WARNING"
    dir: str = ""  # 为空时不写日志文件
    max_file_size: int = 10 * 1024 * 1024  # 10MB
    backup_count: int = 5

    @classmethod
    def from_env(cls) -> 'LoggingSettings':
        """从环境变量创建日志配置"""
        return cls(
            level=os.getenv('SKEWKIT_LOG_LEVEL', 'INFO'),
            console_level=os.getenv('SKEWKIT_LOG_CONSOLE_LEVEL', 'WARNING'),
            dir=os.getenv('SKEWKIT_LOG_DIR', ''),
            max_file_size=int(os.getenv('SKEWKIT_LOG_MAX_FILE_SIZE', '10485760')),
            backup_count=int(os.getenv('SKEWKIT_LOG_BACKUP_COUNT', '5'))
        )


@dataclass
class SkewKitSettings:
    """SkewKit 主配置"""
    enumeration: EnumerationSettings = field(default_factory=EnumerationSettings)
    factorization: FactorizationSettings = field(default_factory=FactorizationSettings)
    compute: ComputeSettings = field(default_factory=ComputeSettings)
    corpus: CorpusSettings = field(default_factory=CorpusSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    @classmethod
    def from_env(cls) -> 'SkewKitSettings':
        """从环境变量创建完整配置"""
        return cls(
            enumeration=EnumerationSettings.from_env(),
            factorization=FactorizationSettings.from_env(),
            compute=ComputeSettings.from_env(),
            corpus=CorpusSettings.from_env(),
            logging=LoggingSettings.from_env()
        )

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        import dataclasses
        return dataclasses.asdict(self)

    def validate(self) -> bool:
        """验证配置有效性"""
        errors = []

        # 验证枚举上限
        if self.enumeration.hard_limit < 1:
            errors.append("Enumeration hard limit must be positive")

        if not (1 <= self.enumeration.max_cells <= self.enumeration.hard_limit):
            errors.append(
                f"SKEWKIT_MAX_CELLS must be between 1 and {self.enumeration.hard_limit}"
            )

        if self.factorization.max_cells < 1:
            errors.append("Factorization bound must be positive")

        # 验证计算配置
        if self.compute.lr_backend not in LR_BACKENDS:
            errors.append(f"LR backend must be one of {LR_BACKENDS}")

        if self.compute.identity_basis not in IDENTITY_BASES:
            errors.append(f"Identity basis must be one of {IDENTITY_BASES}")

        if self.compute.workers == 0 or self.compute.workers < -1:
            errors.append("Workers must be positive or -1")

        if self.compute.amalgam_copies < 3 or self.compute.amalgam_copies % 2 == 0:
            errors.append("Amalgam copies must be an odd number >= 3")

        # 验证语料配置
        if self.corpus.random_samples < 0:
            errors.append("Random sample count must be non-negative")

        if self.corpus.max_d_cells < 1 or self.corpus.max_e_cells < 1:
            errors.append("Corpus diagram bounds must be positive")

        # 验证日志配置
        if self.logging.dir:
            log_dir = Path(self.logging.dir)
            try:
                log_dir.mkdir(parents=True, exist_ok=True)
            except Exception as e:
                errors.append(f"Cannot create log directory: {e}")

        if errors:
            logger.error(f"Configuration validation failed: {errors}")
            return False

        return True


# 全局配置实例
_settings: Optional[SkewKitSettings] = None


def get_settings() -> SkewKitSettings:
    """获取全局配置实例"""
    global _settings
    if _settings is None:
        settings = SkewKitSettings.from_env()

        # 验证配置
        if not settings.validate():
            raise ValueError("Invalid configuration")

        _settings = settings
        logger.debug(f"Configuration loaded: max_cells={settings.enumeration.max_cells}, "
                     f"lr_backend={settings.compute.lr_backend}")

    return _settings


def reload_settings() -> SkewKitSettings:
    """重新加载配置"""
    global _settings
    _settings = None
    return get_settings()


# 快捷访问函数
def get_enumeration_settings() -> EnumerationSettings:
    """获取枚举配置"""
    return get_settings().enumeration


def get_factorization_settings() -> FactorizationSettings:
    """获取分解搜索配置"""
    return get_settings().factorization


def get_compute_settings() -> ComputeSettings:
    """获取计算配置"""
    return get_settings().compute


def get_corpus_settings() -> CorpusSettings:
    """获取随机语料配置"""
    return get_settings().corpus


def get_logging_settings() -> LoggingSettings:
    """获取日志配置"""
    return get_settings().logging


def print_config():
    """打印配置信息"""
    import json
    print(json.dumps(get_settings().to_dict(), indent=2, ensure_ascii=False))


if __name__ == "__main__":
    print("SkewKit Configuration Test")
    print("=" * 50)

    try:
        settings = get_settings()
        print(f"✓ Configuration loaded successfully")
        print(f"  - Max cells: {settings.enumeration.max_cells}")
        print(f"  - LR backend: {settings.compute.lr_backend}")
        print(f"  - Workers: {settings.compute.workers}")
        print(f"  - Log Level: {settings.logging.level}")

        print("\n" + "=" * 50)
        print("Full Configuration:")
        print_config()

    except Exception as e:
        print(f"✗ Configuration test failed: {e}")
        import traceback
        traceback.print_exc()
