"""
酉轨道上的多起点模式搜索

K = U₀ exp(iH(x)) diag(Λ) exp(iH(x))† U₀†，H(x) = Σ x_k G_k，G_k 为 su(d) 的广义 Gell-Mann 基。
每个起点 U₀ 由独立随机流 default_rng(seed ^ start_index) 抽取 Haar 酉，
结果与执行顺序和并行度无关
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable

import numpy as np

from backend.statesgen import haar_unitary

from .schema import OptimizerConfig, StartOutcome

logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def su_basis(d: int) -> np.ndarray:
    """广义 Gell-Mann 矩阵，形状 (d²-1, d, d)，Hermite、无迹、Tr(G_a G_b) = 2δ_ab"""
    basis = []
    for j in range(d):
        for k in range(j + 1, d):
            sym = np.zeros((d, d), dtype=np.complex128)
            sym[j, k] = sym[k, j] = 1.0
            anti = np.zeros((d, d), dtype=np.complex128)
            anti[j, k] = -1j
            anti[k, j] = 1j
            basis.extend([sym, anti])
    for l in range(1, d):
        diag = np.zeros((d, d), dtype=np.complex128)
        diag[np.arange(l), np.arange(l)] = 1.0
        diag[l, l] = -l
        basis.append(np.sqrt(2.0 / (l * (l + 1))) * diag)
    out = np.array(basis, dtype=np.complex128).reshape(d * d - 1, d, d)
    out.setflags(write=False)
    return out


def exp_i_hermitian(h: np.ndarray) -> np.ndarray:
    """exp(iH)，H Hermite"""
    eigenvalues, eigenvectors = np.linalg.eigh(h)
    return (eigenvectors * np.exp(1j * eigenvalues)) @ eigenvectors.conj().T


def orbit_unitary(u0: np.ndarray, x: np.ndarray) -> np.ndarray:
    basis = su_basis(u0.shape[0])
    return u0 @ exp_i_hermitian(np.tensordot(x, basis, axes=1))


def pattern_search(objective: Callable[[np.ndarray], float], n_params: int,
                   cfg: OptimizerConfig) -> tuple[np.ndarray, float, int, bool]:
    """
    坐标模式搜索：逐坐标试探 ±step，有改进即移动；一整轮无改进则 step *= shrink

    Returns:
        (x, 目标值, 迭代轮数, 是否因 step < tol 停止)
    """
    x = np.zeros(n_params)
    fx = objective(x)
    step = cfg.initial_step
    iterations = 0
    while step >= cfg.tol and iterations < cfg.max_iters:
        iterations += 1
        improved = False
        for k in range(n_params):
            for sign in (1.0, -1.0):
                trial = x.copy()
                trial[k] += sign * step
                ft = objective(trial)
                if ft < fx:
                    x, fx = trial, ft
                    improved = True
                    break
        if not improved:
            step *= cfg.shrink
    return x, fx, iterations, step < cfg.tol


def run_start(index: int, cost_of_unitary: Callable[[np.ndarray], float], d: int,
              cfg: OptimizerConfig) -> StartOutcome:
    rng = np.random.default_rng(cfg.seed ^ index)
    u0 = haar_unitary(d, rng)

    def objective(x: np.ndarray) -> float:
        return cost_of_unitary(orbit_unitary(u0, x))

    x, value, iterations, converged = pattern_search(objective, d * d - 1, cfg)
    logger.debug("[lqu] start %d: value=%.12g iters=%d converged=%s",
                 index, value, iterations, converged)
    return StartOutcome(index=index, value=float(value), unitary=orbit_unitary(u0, x),
                        iterations=iterations, converged=converged)


def multi_start(cost_of_unitary: Callable[[np.ndarray], float], d: int,
                cfg: OptimizerConfig) -> list[StartOutcome]:
    """按起点编号顺序返回全部结果；workers > 1 时用线程池并行"""
    indices = range(cfg.n_starts)
    if cfg.workers == 1:
        return [run_start(i, cost_of_unitary, d, cfg) for i in indices]
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        return list(pool.map(lambda i: run_start(i, cost_of_unitary, d, cfg), indices))


def pick_best(outcomes: list[StartOutcome]) -> StartOutcome:
    """最小值，并列时取编号最小者"""
    return min(outcomes, key=lambda o: (o.value, o.index))
