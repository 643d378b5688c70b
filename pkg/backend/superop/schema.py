"""
schema.py — 超算子核表
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from backend.errors import DimensionMismatch
from backend.matcore import matrix_of


class KernelKind(str, Enum):
    MEAN = "mean"            # m_f(x, y)
    MOROZOVA = "morozova"    # c_f = 1/m_f
    CHECK = "check"          # č(x, y) = f(0)/m_f(x, y)


@dataclass(frozen=True)
class KernelTable:
    """ρ 本征基下的 dim×dim 实核表 k(λ_i, λ_j)，构造后只读，可跨线程共享"""

    label: str
    function_name: str
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    table: np.ndarray

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def _check(self, a: np.ndarray) -> np.ndarray:
        a = matrix_of(a)
        if a.shape != self.table.shape:
            raise DimensionMismatch(f"核表维度 {self.table.shape} 与矩阵 {a.shape} 不符")
        return a

    def to_eigenbasis(self, a) -> np.ndarray:
        a = self._check(a)
        return self.eigenvectors.conj().T @ a @ self.eigenvectors

    def from_eigenbasis(self, a_tilde: np.ndarray) -> np.ndarray:
        return self.eigenvectors @ a_tilde @ self.eigenvectors.conj().T

    def apply(self, a) -> np.ndarray:
        """k(L_ρ, R_ρ)(A)"""
        return self.from_eigenbasis(self.table * self.to_eigenbasis(a))

    def quadratic(self, a, b=None) -> complex:
        """Tr(A† k(L_ρ, R_ρ) B)，对第二个参数线性"""
        a_tilde = self.to_eigenbasis(a)
        b_tilde = a_tilde if b is None else self.to_eigenbasis(b)
        return complex(np.sum(a_tilde.conj() * self.table * b_tilde))
