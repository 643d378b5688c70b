"""
schema.py — 量子态与可观测量的不可变数据结构

构造后数组只读，所有类型可在多线程间无锁共享
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from backend.config import settings
from backend.errors import DimensionMismatch, InvalidState

from .linalg import hermitize, spectral_decompose


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Observable:
    """可观测量：Hermite 复矩阵"""

    matrix: np.ndarray

    @classmethod
    def from_array(cls, m) -> Observable:
        return cls(matrix=_readonly(hermitize(m)))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> np.ndarray:
        return spectral_decompose(self.matrix)[0]


@dataclass(frozen=True)
class DensityMatrix:
    """密度矩阵：Hermite、半正定、单位迹，缓存谱分解

    eigenvalues 升序；|λ| ≤ clip_tol 的特征值截为 0
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def from_array(cls, m) -> DensityMatrix:
        """
        校验并构造密度矩阵

        Raises:
            NotHermitian: Hermite 偏差超过容差
            InvalidState: 特征值过负 / 迹不为 1 / 特征向量非酉
        """
        h = hermitize(m)
        trace = float(np.real(np.trace(h)))
        if abs(trace - 1.0) > settings.trace_tol:
            raise InvalidState(f"迹不为 1: Tr ρ = {trace!r}")

        eigenvalues, eigenvectors = spectral_decompose(h)
        if eigenvalues[0] < -settings.clip_tol:
            raise InvalidState(f"存在负特征值: λ_min = {eigenvalues[0]:.3e}")
        eigenvalues = np.where(eigenvalues <= settings.clip_tol, 0.0, eigenvalues)

        dim = h.shape[0]
        unitary_residual = np.max(np.abs(eigenvectors.conj().T @ eigenvectors - np.eye(dim)))
        if unitary_residual > settings.unitary_tol:
            raise InvalidState(f"特征向量矩阵非酉: 残差 {unitary_residual:.3e}")

        return cls(
            matrix=_readonly(h),
            eigenvalues=_readonly(eigenvalues),
            eigenvectors=_readonly(eigenvectors),
        )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.eigenvalues > settings.positive_tol))

    def is_faithful(self) -> bool:
        return bool(self.eigenvalues[0] > settings.positive_tol)

    def is_pure(self, tol: float = 1e-12) -> bool:
        return bool(abs(self.eigenvalues[-1] - 1.0) <= tol)


@dataclass(frozen=True)
class BipartiteState:
    """两体态 ρ₁₂，带张量分解维度 (d1, d2)"""

    state: DensityMatrix
    d1: int
    d2: int
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise DimensionMismatch(f"子系统维度必须为正: ({self.d1}, {self.d2})")
        if self.d1 * self.d2 != self.state.dim:
            raise DimensionMismatch(
                f"d1·d2 = {self.d1 * self.d2} 与态维度 {self.state.dim} 不符")

    @classmethod
    def from_array(cls, m, d1: int, d2: int, label: str | None = None) -> BipartiteState:
        return cls(state=DensityMatrix.from_array(m), d1=d1, d2=d2, label=label)

    @property
    def matrix(self) -> np.ndarray:
        return self.state.matrix

    @property
    def dims(self) -> tuple[int, int]:
        return self.d1, self.d2
