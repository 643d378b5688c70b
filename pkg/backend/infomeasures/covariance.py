"""
量子 f-协方差与单调度量
Cov^f_ρ(A, B) = Tr B₀ m_f(L_ρ, R_ρ) A₀,  A₀ = A - Tr(ρA)·I
⟨A, B⟩_{ρ,f} = Tr A† c_f(L_ρ, R_ρ) B
"""

import numpy as np

from backend.errors import DimensionMismatch
from backend.fcatalog import MonotoneFunction
from backend.matcore import DensityMatrix, Observable, as_complex_matrix, expectation
from backend.superop import KernelKind, kernel_table


def _observable(a) -> Observable:
    return a if isinstance(a, Observable) else Observable.from_array(a)


def _centered(rho: DensityMatrix, a: Observable) -> np.ndarray:
    if a.dim != rho.dim:
        raise DimensionMismatch(f"可观测量维度 {a.dim} 与态维度 {rho.dim} 不符")
    return a.matrix - expectation(rho, a) * np.eye(a.dim)


def variance(rho: DensityMatrix, a) -> float:
    """Var_ρ(A) = Tr ρA₀²"""
    a0 = _centered(rho, _observable(a))
    return float(np.real(np.einsum("ij,jk,ki->", rho.matrix, a0, a0)))


def f_covariance(f: MonotoneFunction, rho: DensityMatrix, a, b) -> complex:
    """
    量子 f-协方差，对第二个参数线性

    f = sld 时为对称化协方差；ρ 纯态时 Cov^f(A, A) = 2 f(0) Var_ρ(A)
    """
    a0 = _centered(rho, _observable(a))
    b0 = _centered(rho, _observable(b))
    return kernel_table(KernelKind.MEAN, f, rho).quadratic(a0, b0)


def f_variance(f: MonotoneFunction, rho: DensityMatrix, a) -> float:
    return float(np.real(f_covariance(f, rho, a, a)))


def qfi_metric(f: MonotoneFunction, rho: DensityMatrix, a, b) -> complex:
    """
    单调度量 ⟨A, B⟩_{ρ,f}，ρ 须 faithful

    [A, ρ] = 0 时 ⟨A, A⟩ = Tr ρ⁻¹A²
    """
    a = as_complex_matrix(a.matrix if isinstance(a, Observable) else a)
    b = as_complex_matrix(b.matrix if isinstance(b, Observable) else b)
    if a.shape != rho.matrix.shape or b.shape != rho.matrix.shape:
        raise DimensionMismatch(f"度量输入维度 {a.shape}/{b.shape} 与态 {rho.matrix.shape} 不符")
    return kernel_table(KernelKind.MOROZOVA, f, rho).quadratic(a, b)
