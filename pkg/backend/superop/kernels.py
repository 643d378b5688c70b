"""
超算子 m_f(L_ρ, R_ρ)、c_f(L_ρ, R_ρ)、č(L_ρ, R_ρ)

L_ρ 与 R_ρ 对易，在 ρ 的本征基下逐元素作用：
    (k(L_ρ, R_ρ) A)_ij = k(λ_i, λ_j) · A_ij
"""

import logging

import numpy as np

from backend.config import settings
from backend.errors import NotFaithful, NotRegular
from backend.fcatalog import MonotoneFunction
from backend.matcore import DensityMatrix

from .schema import KernelKind, KernelTable

logger = logging.getLogger(__name__)


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


def degenerate_mask(eigenvalues: np.ndarray) -> np.ndarray:
    """|λ_i - λ_j| < degenerate_rel_tol · max λ 的特征值对"""
    x = eigenvalues[:, None]
    y = eigenvalues[None, :]
    scale = max(float(np.max(eigenvalues)), np.finfo(np.float64).tiny)
    return np.abs(x - y) < settings.degenerate_rel_tol * scale


def mean_table(f: MonotoneFunction, eigenvalues: np.ndarray) -> np.ndarray:
    """m_f(λ_i, λ_j)，简并对取对角极限 m_f(x, x) = x，(0, 0) 处为 0"""
    x = eigenvalues[:, None]
    y = eigenvalues[None, :]
    return np.where(degenerate_mask(eigenvalues), (x + y) / 2.0, f.scalar_mean(x, y))


def kernel_table(kind: KernelKind, f: MonotoneFunction, rho: DensityMatrix) -> KernelTable:
    """
    预计算 (f, ρ) 的核表

    Raises:
        NotFaithful: Morozova 核要求 ρ 满秩
        NotRegular: Check 核要求 f regular
    """
    kind = KernelKind(kind)
    lam = rho.eigenvalues
    means = mean_table(f, lam)

    if kind is KernelKind.MEAN:
        table = means
    elif kind is KernelKind.MOROZOVA:
        if not rho.is_faithful():
            raise NotFaithful(f"Morozova 核要求 faithful 态: λ_min = {lam[0]:.3e}")
        table = 1.0 / means
    else:
        if not f.regular:
            raise NotRegular(f"Check 核要求 regular 函数: {f.name}")
        table = np.divide(f.f_at_zero, means, out=np.zeros_like(means), where=means > 0)

    logger.debug("[superop] %s 核表 f=%s dim=%d", kind.value, f.name, lam.size)
    return KernelTable(
        label=kind.value,
        function_name=f.name,
        eigenvalues=rho.eigenvalues,
        eigenvectors=rho.eigenvectors,
        table=_readonly(table),
    )


def apply_kernel(kind: KernelKind, f: MonotoneFunction, rho: DensityMatrix, a) -> np.ndarray:
    """k(L_ρ, R_ρ)(A)；对同一 ρ 反复求值时应复用 kernel_table"""
    return kernel_table(kind, f, rho).apply(a)
