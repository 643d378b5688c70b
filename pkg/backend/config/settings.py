import os
from pathlib import Path
from typing import Optional
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from dotenv import load_dotenv


class Settings:
    """配置管理器：TOML + 数值参数校验"""

    def __init__(self, config_path: Optional[str] = None):
        # 1. 确定配置文件路径
        # 优先级：显式参数 > 环境变量 > 项目config目录 > 包内默认
        load_dotenv()
        env_path = os.getenv("MASI_SETTINGS")
        if config_path:
            self.config_file = Path(config_path)
        elif env_path:
            self.config_file = Path(env_path)
        else:
            candidates = [
                Path("backend/config/settings.toml"),
                Path(__file__).resolve().parent / "settings.toml",
            ]
            self.config_file = next(
                (p for p in candidates if p.exists()), None)

        if not self.config_file or not self.config_file.exists():
            raise FileNotFoundError(
                f"❌ 配置文件未找到: {self.config_file}\n"
                "请检查 MASI_SETTINGS 或 backend/config/settings.toml"
            )

        # 2. 加载TOML
        with open(self.config_file, "rb") as f:
            raw_config = tomllib.load(f)

        # 3. 解析为属性 + 取值校验
        self._parse_config(raw_config)
        self._validate()

    def _parse_config(self, config: dict):
        num = config.get("numerics", {})
        self.hermitian_tol: float = float(num.get("hermitian_tol", 1e-12))
        self.clip_tol: float = float(num.get("clip_tol", 1e-12))
        self.trace_tol: float = float(num.get("trace_tol", 1e-12))
        self.unitary_tol: float = float(num.get("unitary_tol", 1e-10))
        self.positive_tol: float = float(num.get("positive_tol", 1e-12))
        self.degenerate_rel_tol: float = float(
            num.get("degenerate_rel_tol", 1e-12))
        self.series_radius: float = float(num.get("series_radius", 1e-4))

        opt = config.get("optimizer", {})
        self.opt_n_starts: int = int(opt.get("n_starts", 32))
        self.opt_max_iters: int = int(opt.get("max_iters", 500))
        self.opt_tol: float = float(opt.get("tol", 1e-9))
        self.opt_initial_step: float = float(opt.get("initial_step", 0.3))
        self.opt_shrink: float = float(opt.get("shrink", 0.5))
        self.opt_workers: int = int(opt.get("workers", 1))

        quad = config.get("quadrature", {})
        self.quad_epsabs: float = float(quad.get("epsabs", 1e-8))
        self.quad_limit: int = int(quad.get("limit", 200))

        order = config.get("order", {})
        self.order_n_pairs: int = int(order.get("n_pairs", 200))
        self.order_min_dim: int = int(order.get("min_dim", 2))
        self.order_max_dim: int = int(order.get("max_dim", 5))
        self.order_slack: float = float(order.get("slack", 1e-8))

        log_cfg = config.get("logging", {})
        self.log_level: str = str(log_cfg.get("level", "WARNING")).upper()
        self.log_format: str = str(log_cfg.get(
            "format", "%(asctime)s %(levelname)s %(name)s %(message)s"))

    def _validate(self):
        """关键参数取值校验"""
        for key in ("hermitian_tol", "clip_tol", "trace_tol", "unitary_tol",
                    "positive_tol", "degenerate_rel_tol", "series_radius",
                    "opt_tol", "quad_epsabs", "order_slack"):
            if getattr(self, key) < 0:
                raise ValueError(f"❌ {key} 不能为负数！请检查 {self.config_file}")

        if self.opt_n_starts < 1:
            raise ValueError(f"❌ optimizer.n_starts 必须 ≥ 1: {self.opt_n_starts}")
        if self.opt_max_iters < 1:
            raise ValueError(f"❌ optimizer.max_iters 必须 ≥ 1: {self.opt_max_iters}")
        if not 0 < self.opt_shrink < 1:
            raise ValueError(f"❌ optimizer.shrink 必须在 (0, 1) 内: {self.opt_shrink}")
        if self.opt_workers < 1:
            raise ValueError(f"❌ optimizer.workers 必须 ≥ 1: {self.opt_workers}")
        if not 1 <= self.order_min_dim <= self.order_max_dim:
            raise ValueError(
                f"❌ order.min_dim/max_dim 非法: {self.order_min_dim}/{self.order_max_dim}")
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"❌ logging.level 非法: {self.log_level}")


# 全局单例（按需初始化）
_settings: Optional[Settings] = None


def get_settings(config_path: Optional[str] = None) -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings(config_path)
    return _settings


# 便捷导入：from backend.config import settings
settings = get_settings()
