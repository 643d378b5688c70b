"""
测试 TOML 配置加载 — 默认值、显式路径、环境变量、取值校验
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

import pytest

from backend.config import Settings, settings


def _write(tmp_path, text: str) -> str:
    path = tmp_path / "settings.toml"
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_default_settings_loaded():
    """包内默认配置"""
    assert settings.hermitian_tol == 1e-12
    assert settings.clip_tol == 1e-12
    assert settings.opt_n_starts == 32
    assert settings.opt_tol == 1e-9
    assert settings.order_n_pairs == 200
    assert settings.log_level == "WARNING"


def test_explicit_path_overrides(tmp_path):
    path = _write(tmp_path, "[optimizer]\nn_starts = 4\nworkers = 2\n[logging]\nlevel = 'debug'\n")
    cfg = Settings(path)
    assert cfg.opt_n_starts == 4
    assert cfg.opt_workers == 2
    assert cfg.log_level == "DEBUG"
    # 未给出的键取默认值
    assert cfg.hermitian_tol == 1e-12
    assert cfg.quad_limit == 200


def test_env_path(tmp_path, monkeypatch):
    """MASI_SETTINGS 指定配置文件"""
    path = _write(tmp_path, "[order]\nn_pairs = 17\n")
    monkeypatch.setenv("MASI_SETTINGS", path)
    cfg = Settings()
    assert cfg.order_n_pairs == 17
    assert str(cfg.config_file) == path


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        Settings(str(tmp_path / "nope.toml"))


@pytest.mark.parametrize("text", [
    "[numerics]\nclip_tol = -1.0\n",
    "[optimizer]\nn_starts = 0\n",
    "[optimizer]\nshrink = 1.5\n",
    "[optimizer]\nworkers = 0\n",
    "[order]\nmin_dim = 4\nmax_dim = 3\n",
    "[logging]\nlevel = 'LOUD'\n",
])
def test_invalid_values(tmp_path, text):
    """非法取值在加载时报错"""
    with pytest.raises(ValueError):
        Settings(_write(tmp_path, text))
