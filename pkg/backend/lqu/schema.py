"""
schema.py — f-LQU 优化配置与结果
"""

from __future__ import annotations

from dataclasses import dataclass, field

from backend.config import settings
from backend.errors import ParameterOutOfRange
from backend.matcore import Observable


@dataclass(frozen=True)
class OptimizerConfig:
    """多起点模式搜索配置，缺省值取自 settings.toml [optimizer]"""

    n_starts: int = field(default_factory=lambda: settings.opt_n_starts)
    max_iters: int = field(default_factory=lambda: settings.opt_max_iters)
    tol: float = field(default_factory=lambda: settings.opt_tol)
    seed: int = 0
    initial_step: float = field(default_factory=lambda: settings.opt_initial_step)
    shrink: float = field(default_factory=lambda: settings.opt_shrink)
    workers: int = field(default_factory=lambda: settings.opt_workers)

    def __post_init__(self):
        if self.n_starts < 1:
            raise ParameterOutOfRange(f"n_starts 必须 ≥ 1: {self.n_starts}")
        if self.max_iters < 1:
            raise ParameterOutOfRange(f"max_iters 必须 ≥ 1: {self.max_iters}")
        if self.tol <= 0 or self.initial_step <= 0:
            raise ParameterOutOfRange(f"tol/initial_step 必须为正: {self.tol}/{self.initial_step}")
        if not 0 < self.shrink < 1:
            raise ParameterOutOfRange(f"shrink 必须在 (0, 1) 内: {self.shrink}")
        if self.workers < 1:
            raise ParameterOutOfRange(f"workers 必须 ≥ 1: {self.workers}")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterOutOfRange(f"seed 必须为 64 位无符号整数: {self.seed}")


@dataclass(frozen=True)
class StartOutcome:
    """单个起点的局部搜索结果"""

    index: int
    value: float
    unitary: object
    iterations: int
    converged: bool


@dataclass(frozen=True)
class LquResult:
    """
    f-LQU 结果

    value 为各起点最优值（即使 converged=False 也照常报告）；
    spread 为各起点结果的 max - min
    """

    value: float
    minimizer: Observable
    starts: int
    best_start_index: int
    converged: bool
    spread: float
    function_name: str = ""
    start_values: tuple[float, ...] = ()
