"""
矩阵核心模块 — 复 Hermite 矩阵代数、量子态类型、Kubo-Ando 矩阵平均
"""

from .linalg import (as_complex_matrix, commutator, hermitian_residual,
                     hermitize, is_psd_le, matrix_function,
                     spectral_decompose, tensor)
from .means import matrix_mean
from .ops import embed_local, expectation, matrix_of, partial_trace
from .schema import BipartiteState, DensityMatrix, Observable
