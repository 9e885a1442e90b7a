import json
import logging

import pytest

from skewkit import config
from skewkit.utils.logging_utils import (
    LogCategory,
    LogLevel,
    PerformanceTimer,
    StructuredLogger,
    VerificationLog,
    get_logger,
    log_errors,
    log_performance,
)


def _entries(path):
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
    return [json.loads(line.split(" - ", 3)[3]) for line in lines]


def test_defaults(settings_env):
    settings = settings_env()
    assert settings.enumeration.max_cells == 12
    assert settings.compute.amalgam_copies == 5
    assert settings.compute.identity_basis == "h"
    assert settings.corpus.seed == 1729
    assert settings.logging.dir == ""


def test_environment_overrides(settings_env):
    settings = settings_env(max_cells=6, lr_backend="NATIVE", workers=-1, seed=7)
    assert settings.enumeration.max_cells == 6
    assert settings.compute.lr_backend == "native"
    assert settings.compute.workers == -1
    assert config.get_corpus_settings().seed == 7
    assert config.reload_settings().enumeration.max_cells == 6


@pytest.mark.parametrize("key, value", [
    ("amalgam_copies", 4),
    ("amalgam_copies", 1),
    ("lr_backend", "fortran"),
    ("identity_basis", "monomial"),
    ("workers", 0),
    ("max_cells", 40),
])
def test_invalid_configuration(settings_env, key, value):
    with pytest.raises(ValueError, match="Invalid configuration"):
        settings_env(**{key: value})


def test_to_dict(settings_env):
    payload = settings_env().to_dict()
    assert set(payload) == {"enumeration", "factorization", "compute", "corpus", "logging"}


def test_structured_logger_writes_json_lines(tmp_path):
    logger = StructuredLogger(name="skewkit-test", log_dir=str(tmp_path), log_level="DEBUG")
    logger.log_structured(LogLevel.INFO, LogCategory.EXPANSION, "expanded", {"cells": 3})
    logger.log_verification(VerificationLog(
        suite="properties", timestamp=0.0, duration_ms=1.0, checks=2, failures=1,
        failed_checks=["sylvester"],
    ))
    for handler in logger.logger.handlers:
        handler.flush()

    entries = _entries(tmp_path / "skewkit-test.log")
    assert entries[0]["category"] == "expansion"
    assert entries[0]["data"] == {"cells": 3}
    assert entries[1]["level"] == "ERROR"
    assert entries[1]["data"]["failed_checks"] == ["sylvester"]

    errors = _entries(tmp_path / "skewkit-test_error.log")
    assert [e["category"] for e in errors] == ["verification"]


def test_log_error_records_context(tmp_path):
    logger = StructuredLogger(name="skewkit-errors", log_dir=str(tmp_path))
    try:
        raise ValueError("bad shape")
    except ValueError as e:
        logger.log_error(LogCategory.CLI, "failed", e, {"argv": ["expand"]})
    for handler in logger.logger.handlers:
        handler.flush()
    entry = _entries(tmp_path / "skewkit-errors_error.log")[0]
    assert entry["data"]["error_type"] == "ValueError"
    assert entry["data"]["context"] == {"argv": ["expand"]}


def test_performance_timer(tmp_path):
    logger = StructuredLogger(name="skewkit-perf", log_dir=str(tmp_path))
    with PerformanceTimer(logger, "classify", {"items": 5}) as timer:
        pass
    assert timer.duration_ms >= 0
    logger.perf_handler.flush()
    entry = _entries(tmp_path / "skewkit-perf_performance.log")[0]
    assert entry["data"]["operation"] == "classify"
    assert entry["data"]["items"] == 5


def test_console_only_logger_has_no_files(tmp_path):
    logger = StructuredLogger(name="skewkit-console")
    assert logger.log_dir is None
    assert logger.perf_handler is None
    assert all(isinstance(h, logging.StreamHandler) for h in logger.logger.handlers)


def test_global_logger_follows_settings(settings_env, tmp_path):
    settings_env(log_dir=tmp_path / "logs")
    logger = get_logger()
    assert logger is get_logger()
    assert logger.log_dir == tmp_path / "logs"


def test_decorators(settings_env):
    settings_env()

    @log_performance("unit")
    def double(x):
        return 2 * x

    @log_errors(LogCategory.SYSTEM)
    def explode():
        raise RuntimeError("boom")

    assert double(4) == 8
    with pytest.raises(RuntimeError):
        explode()


def test_file_only_records_skip_the_console(tmp_path, capsys):
    logger = StructuredLogger(name="skewkit-quiet", log_dir=str(tmp_path))
    logger.log_error(LogCategory.CLI, "hidden", ValueError("bad"), console=False)
    logger.log_error(LogCategory.CLI, "shown", ValueError("bad"))
    for handler in logger.logger.handlers:
        handler.flush()
    err = capsys.readouterr().err
    assert "shown" in err
    assert "hidden" not in err
    messages = [e["message"] for e in _entries(tmp_path / "skewkit-quiet_error.log")]
    assert messages == ["hidden", "shown"]
