"""
度量调整斜信息 I^f_ρ(A)，f 须 regular

两条独立求值路径：
    VarianceDifference  I = Var_ρ(A) - Var^{f̃}_ρ(A)，逐元素权重 W_ij = (λ_i+λ_j)/2 - m_f̃(λ_i, λ_j)
    CommutatorKernel    I = ½ Tr (i[ρ,A])† č(L_ρ, R_ρ) (i[ρ,A])
"""

import logging

import numpy as np

from backend.config import settings
from backend.errors import DimensionMismatch, NotRegular
from backend.fcatalog import MonotoneFunction, f_tilde
from backend.matcore import DensityMatrix, Observable, commutator, matrix_function
from backend.superop import KernelKind, KernelTable, kernel_table
from backend.superop.kernels import degenerate_mask

from .schema import EvalPath, MeasureReport

logger = logging.getLogger(__name__)

# 舍入导致的微小负值截为 0
_NEGATIVE_FLOOR = -1e-10


def _observable(rho: DensityMatrix, a) -> Observable:
    a = a if isinstance(a, Observable) else Observable.from_array(a)
    if a.dim != rho.dim:
        raise DimensionMismatch(f"可观测量维度 {a.dim} 与态维度 {rho.dim} 不符")
    return a


def skew_weights(f: MonotoneFunction, rho: DensityMatrix) -> KernelTable:
    """
    I^f 在 ρ 本征基下的权重表，I^f_ρ(A) = Σ_ij W_ij |Ã_ij|²

    同一 ρ 上对多个可观测量求值（f-LQU 优化）时复用
    """
    if not f.regular:
        raise NotRegular(f"斜信息要求 regular 函数: {f.name}")
    lam = rho.eigenvalues
    x = lam[:, None]
    y = lam[None, :]
    weights = (x + y) / 2.0 - f_tilde(f).scalar_mean(x, y)
    weights = np.where(degenerate_mask(lam), 0.0, weights)
    weights.setflags(write=False)
    return KernelTable(
        label="skew",
        function_name=f.name,
        eigenvalues=rho.eigenvalues,
        eigenvectors=rho.eigenvectors,
        table=weights,
    )


def _commutator_path(f: MonotoneFunction, rho: DensityMatrix, a: Observable) -> float:
    c = commutator(rho.matrix, a.matrix)
    check = kernel_table(KernelKind.CHECK, f, rho)
    return 0.5 * float(np.real(check.quadratic(c)))


def skew_information(f: MonotoneFunction, rho: DensityMatrix, a) -> MeasureReport:
    """
    I^f_ρ(A)，0 ≤ I ≤ Var_ρ(A)，ρ 纯态时取等

    Returns:
        MeasureReport，value 取 VarianceDifference 路径

    Raises:
        NotRegular: f(0) = 0
        DimensionMismatch: 维度不符
    """
    a = _observable(rho, a)
    primary = float(np.real(skew_weights(f, rho).quadratic(a)))
    secondary = _commutator_path(f, rho, a)
    residual = abs(primary - secondary)

    value = primary
    if _NEGATIVE_FLOOR <= value < 0.0:
        value = 0.0
    elif value < _NEGATIVE_FLOOR:
        logger.warning("[infomeasures] %s 斜信息为负: %.3e", f.name, value)
    if residual > 1e-8:
        logger.warning("[infomeasures] %s 两条路径差 %.3e 超过 1e-8", f.name, residual)

    return MeasureReport(value=value, path=EvalPath.VARIANCE_DIFFERENCE, cross_residual=residual)


def skew_information_sesquilinear(f: MonotoneFunction, rho: DensityMatrix, a, b) -> complex:
    """I^f_ρ(A, B) = Cov_ρ(A, B) - Cov^{f̃}_ρ(A, B)，对第二个参数线性"""
    a = _observable(rho, a)
    b = _observable(rho, b)
    return skew_weights(f, rho).quadratic(a, b)


def wigner_yanase_dyson(rho: DensityMatrix, a, p: float) -> float:
    """-½ Tr [ρ^p, A][ρ^{1-p}, A]，与 I^{f_p} 相等"""
    a = _observable(rho, a)
    clip = settings.clip_tol
    rho_p = matrix_function(rho.matrix, lambda lam: np.where(lam > clip, lam, 0.0) ** p)
    rho_q = matrix_function(rho.matrix, lambda lam: np.where(lam > clip, lam, 0.0) ** (1.0 - p))
    c_p = rho_p @ a.matrix - a.matrix @ rho_p
    c_q = rho_q @ a.matrix - a.matrix @ rho_q
    return float(-0.5 * np.real(np.trace(c_p @ c_q)))
