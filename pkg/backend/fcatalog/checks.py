"""
F_op 成员资格抽样检验：归一化 f(1)=1、对称 t f(1/t)=f(t)、单调递增
"""

import logging

import numpy as np

from .schema import MembershipReport, MonotoneFunction

logger = logging.getLogger(__name__)


def log_grid(n: int = 81, lo: float = 1e-4, hi: float = 1e4) -> np.ndarray:
    """t ∈ [lo, hi] 的对数网格，n 为奇数时包含 t = 1"""
    return np.logspace(np.log10(lo), np.log10(hi), n)


def check_membership(f: MonotoneFunction, grid: np.ndarray | None = None) -> MembershipReport:
    """
    对 f 做抽样检验

    对称残差按 max(1, f(t)) 缩放，避免大 t 处的舍入误差主导
    """
    grid = log_grid() if grid is None else np.asarray(grid, dtype=np.float64)
    values = f(grid)
    mirrored = grid * f(1.0 / grid)
    scale = np.maximum(1.0, np.abs(values))

    normalization = float(abs(f(1.0) - 1.0))
    symmetry = float(np.max(np.abs(mirrored - values) / scale))

    steps = np.diff(values)
    bad = np.nonzero(steps < -1e-12 * scale[1:])[0]
    witness = None
    if bad.size:
        i = int(bad[0])
        witness = (float(grid[i]), float(grid[i + 1]))

    report = MembershipReport(
        normalization_residual=normalization,
        symmetry_residual=symmetry,
        monotone=witness is None,
        witness=witness,
    )
    if not report.passed(norm_tol=1e-8, sym_tol=1e-8):
        logger.warning("[fcatalog] %s 未通过 F_op 抽样检验: %s", f.name, report)
    return report
