"""
态层面的运算：期望值、偏迹、局域嵌入
"""

import numpy as np

from backend.errors import DimensionMismatch

from .linalg import as_complex_matrix, tensor
from .schema import BipartiteState, DensityMatrix, Observable


def matrix_of(a) -> np.ndarray:
    if isinstance(a, (Observable, DensityMatrix)):
        return a.matrix
    return as_complex_matrix(a)


def expectation(rho: DensityMatrix, a) -> float:
    """E_ρ(A) = Tr(ρA)，返回实部"""
    a = matrix_of(a)
    if a.shape != rho.matrix.shape:
        raise DimensionMismatch(f"期望值维度不匹配: ρ {rho.matrix.shape} vs A {a.shape}")
    return float(np.real(np.einsum("ij,ji->", rho.matrix, a)))


def partial_trace(s: BipartiteState, keep: int) -> DensityMatrix:
    """
    偏迹

    Args:
        s: 两体态
        keep: 保留的子系统编号，1 或 2

    Returns:
        约化密度矩阵（维度 d_keep）
    """
    if keep not in (1, 2):
        raise DimensionMismatch(f"keep 只能为 1 或 2: {keep}")
    blocks = s.matrix.reshape(s.d1, s.d2, s.d1, s.d2)
    if keep == 1:
        reduced = np.einsum("ijkj->ik", blocks)
    else:
        reduced = np.einsum("ijil->jl", blocks)
    return DensityMatrix.from_array(reduced)


def embed_local(k, d2: int) -> np.ndarray:
    """局域算子 K₁ ⊗ 1₂"""
    return tensor(matrix_of(k), np.eye(d2))
