"""
确定性测试输入生成器

随机数统一使用 NumPy 的 PCG64（np.random.default_rng），种子为 64 位整数；
同一种子重复调用逐位相同，不依赖任何全局随机状态
"""

import numpy as np

from backend.errors import DimensionMismatch, ProbsNotNormalized, RankOutOfRange
from backend.matcore import BipartiteState, DensityMatrix, matrix_of, tensor


def _complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """复 Gaussian 矩阵 QR 分解，R 对角元相位归正后 Q 服从 Haar 分布"""
    q, r = np.linalg.qr(_complex_gaussian(rng, (dim, dim)))
    diag = np.diagonal(r)
    phases = diag / np.abs(diag)
    return q * phases[None, :]


def random_unitary(dim: int, seed: int = 0) -> np.ndarray:
    if dim < 1:
        raise DimensionMismatch(f"维度必须为正: {dim}")
    return haar_unitary(dim, np.random.default_rng(seed))


def random_density(dim: int, rank: int | None = None, seed: int = 0) -> DensityMatrix:
    """
    Wishart 型随机密度矩阵 GG†/Tr(GG†)，G 为 dim×rank 复 Gaussian

    Raises:
        RankOutOfRange: rank 不在 [1, dim] 内
    """
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise RankOutOfRange(f"rank 必须在 [1, {dim}] 内: {rank}")
    g = _complex_gaussian(np.random.default_rng(seed), (dim, rank))
    w = g @ g.conj().T
    return DensityMatrix.from_array(w / np.real(np.trace(w)))


def random_pure(dim: int, seed: int = 0) -> DensityMatrix:
    return random_density(dim, rank=1, seed=seed)


def random_bipartite(d1: int, d2: int, rank: int | None = None, seed: int = 0,
                     label: str | None = None) -> BipartiteState:
    rho = random_density(d1 * d2, rank=rank, seed=seed)
    return BipartiteState(state=rho, d1=d1, d2=d2, label=label)


def classical_quantum(probs, states2=None, seed: int = 0, d2: int = 2,
                      label: str | None = None) -> BipartiteState:
    """
    经典-量子态 Σ_i p_i |i⟩⟨i| ⊗ ρ_i

    Args:
        probs: 概率向量，长度即 d1
        states2: 子系统 2 上的态 ρ_i；None 时按 seed 随机生成 d2 维满秩态
        seed: states2 为 None 时使用
        d2: states2 为 None 时子系统 2 的维度

    Raises:
        ProbsNotNormalized: 概率为负或和不为 1
    """
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1 or probs.size == 0:
        raise DimensionMismatch(f"概率向量形状非法: {probs.shape}")
    if np.any(probs < 0) or abs(float(np.sum(probs)) - 1.0) > 1e-12:
        raise ProbsNotNormalized(f"概率未归一化: Σp = {np.sum(probs)!r}")

    d1 = probs.size
    if states2 is None:
        seeds = np.random.default_rng(seed).integers(0, 2 ** 63, size=d1)
        states2 = [random_density(d2, seed=int(s)) for s in seeds]
    if len(states2) != d1:
        raise DimensionMismatch(f"states2 数量 {len(states2)} 与概率数 {d1} 不符")
    blocks = [matrix_of(r) for r in states2]
    d2 = blocks[0].shape[0]
    if any(b.shape != (d2, d2) for b in blocks):
        raise DimensionMismatch("states2 维度不一致")

    rho = np.zeros((d1 * d2, d1 * d2), dtype=np.complex128)
    for i, (p, block) in enumerate(zip(probs, blocks)):
        rho[i * d2:(i + 1) * d2, i * d2:(i + 1) * d2] = p * block
    return BipartiteState.from_array(rho, d1, d2, label=label)


def bell_state() -> BipartiteState:
    """(|00⟩ + |11⟩)/√2"""
    psi = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.complex128) / np.sqrt(2.0)
    return BipartiteState.from_array(np.outer(psi, psi.conj()), 2, 2, label="bell")


def product_state(rho1, rho2, label: str | None = None) -> BipartiteState:
    r1 = matrix_of(rho1)
    r2 = matrix_of(rho2)
    return BipartiteState.from_array(tensor(r1, r2), r1.shape[0], r2.shape[0], label=label)


def apply_local_unitary(s: BipartiteState, u1=None, u2=None) -> BipartiteState:
    """(U₁ ⊗ U₂) ρ (U₁ ⊗ U₂)†，缺省为单位阵"""
    u1 = np.eye(s.d1) if u1 is None else matrix_of(u1)
    u2 = np.eye(s.d2) if u2 is None else matrix_of(u2)
    if u1.shape != (s.d1, s.d1) or u2.shape != (s.d2, s.d2):
        raise DimensionMismatch(f"局域酉维度 {u1.shape}/{u2.shape} 与 {s.dims} 不符")
    u = tensor(u1, u2)
    return BipartiteState.from_array(u @ s.matrix @ u.conj().T, s.d1, s.d2, label=s.label)
