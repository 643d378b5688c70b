"""
Kubo-Ando 矩阵平均
m_f(A, B) = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from backend.config import settings
from backend.errors import DimensionMismatch, NotPositiveDefinite

from .linalg import hermitize, spectral_decompose

if TYPE_CHECKING:
    from backend.fcatalog import MonotoneFunction


def _positive_spectrum(m, name: str) -> tuple[np.ndarray, np.ndarray]:
    eigenvalues, eigenvectors = spectral_decompose(m)
    if eigenvalues[0] <= settings.positive_tol:
        raise NotPositiveDefinite(f"{name} 非正定: λ_min = {eigenvalues[0]:.3e}")
    return eigenvalues, eigenvectors


def matrix_mean(f: MonotoneFunction, a, b) -> np.ndarray:
    """
    正定矩阵对的算子平均

    Args:
        f: F_op 中的函数
        a, b: 正定矩阵

    Returns:
        正定矩阵 m_f(A, B)

    Raises:
        NotPositiveDefinite: A 或 B 的最小特征值 ≤ positive_tol
    """
    a = hermitize(a)
    b = hermitize(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"矩阵平均维度不匹配: {a.shape} vs {b.shape}")

    lam_a, v_a = _positive_spectrum(a, "A")
    _positive_spectrum(b, "B")

    sqrt_a = (v_a * np.sqrt(lam_a)) @ v_a.conj().T
    inv_sqrt_a = (v_a / np.sqrt(lam_a)) @ v_a.conj().T

    inner = inv_sqrt_a @ b @ inv_sqrt_a
    inner = (inner + inner.conj().T) / 2
    lam_c, v_c = np.linalg.eigh(inner)
    f_inner = (v_c * f(lam_c)) @ v_c.conj().T

    result = sqrt_a @ f_inner @ sqrt_a
    return (result + result.conj().T) / 2
