"""
复 Hermite 矩阵代数工具
构造校验、谱分解、谱演算、张量积、对易子、半正定序判定

所有函数均为纯函数，输入数组不会被修改
"""

from typing import Callable

import numpy as np

from backend.config import settings
from backend.errors import DimensionMismatch, GeometryError, NotHermitian


def as_complex_matrix(m) -> np.ndarray:
    """转为 complex128 方阵并检查元素有限"""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"需要方阵，实际形状 {arr.shape}")
    if arr.shape[0] == 0:
        raise DimensionMismatch("矩阵维度必须为正")
    if not np.all(np.isfinite(arr)):
        raise GeometryError("矩阵含 NaN/Inf")
    return arr


def hermitian_residual(m: np.ndarray) -> float:
    """max-entry 范数 |A - A†|"""
    return float(np.max(np.abs(m - m.conj().T)))


def hermitize(m, tol: float | None = None) -> np.ndarray:
    """
    偏差在容差内时对称化为 (A + A†)/2，否则报错

    Args:
        m: 输入方阵
        tol: Hermite 容差，默认 settings.hermitian_tol

    Raises:
        NotHermitian: 偏差超过容差
    """
    tol = settings.hermitian_tol if tol is None else tol
    arr = as_complex_matrix(m)
    residual = hermitian_residual(arr)
    if residual > tol:
        raise NotHermitian(f"矩阵非 Hermite: |A - A†| = {residual:.3e} > {tol:.1e}")
    return (arr + arr.conj().T) / 2


def spectral_decompose(m) -> tuple[np.ndarray, np.ndarray]:
    """
    Hermite 矩阵谱分解 m = V diag(λ) V†

    Returns:
        (eigenvalues 升序, eigenvectors 酉矩阵，列为特征向量)
    """
    h = hermitize(m)
    eigenvalues, eigenvectors = np.linalg.eigh(h)
    return eigenvalues, eigenvectors


def matrix_function(m, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """谱演算 V fn(diag λ) V†，fn 作用于特征值数组"""
    eigenvalues, eigenvectors = spectral_decompose(m)
    values = np.asarray(fn(eigenvalues))
    return (eigenvectors * values) @ eigenvectors.conj().T


def tensor(a, b) -> np.ndarray:
    """Kronecker 积 a ⊗ b"""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def commutator(a, b) -> np.ndarray:
    """i(AB - BA)；A, B 均 Hermite 时结果 Hermite"""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"对易子维度不匹配: {a.shape} vs {b.shape}")
    return 1j * (a @ b - b @ a)


def is_psd_le(a, b, slack: float = 0.0) -> bool:
    """PSD 序判定 A ≤ B + slack·I，即 B - A 的最小特征值 ≥ -slack"""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"PSD 序比较维度不匹配: {a.shape} vs {b.shape}")
    diff = b - a
    diff = (diff + diff.conj().T) / 2
    return bool(np.linalg.eigvalsh(diff)[0] >= -slack)
