"""
F_op 上的优超序 f ⪯ g 及其格运算

f ⪯ g 当且仅当 φ(t) = ((t+1)/2)·f(t)/g(t) 属于 F_op。抽样检验只能证伪：
    1. φ 在对数网格上有限（否则 inconclusive）
    2. 归一化 φ(1)=1、对称 t φ(1/t) = φ(t)
    3. 标量单调 + Löwner 界 f_min ≤ φ ≤ f_max（F_op 中任何函数都满足）
    4. n_pairs 组随机 0 < A ≤ B：φ(A) ≤ φ(B) + slack·I
"""

import logging

import numpy as np

from backend.config import settings
from backend.errors import GeometryError, MissingWeight

from .checks import log_grid
from .schema import MonotoneFunction, OrderCertificate, OrderStatus
from .weights import from_weight, pointwise_max, pointwise_min

logger = logging.getLogger(__name__)

_SCALAR_TOL = 1e-10


def _ratio_function(f: MonotoneFunction, g: MonotoneFunction):
    def phi(t):
        t = np.asarray(t, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore"):
            return 0.5 * (t + 1.0) * f.extended(t) / g.extended(t)
    return phi


def _random_psd(rng: np.random.Generator, dim: int, rank: int) -> np.ndarray:
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ g.conj().T / rank
    return (m + m.conj().T) / 2


def _apply(phi, m: np.ndarray) -> np.ndarray:
    eigenvalues, eigenvectors = np.linalg.eigh(m)
    values = phi(np.maximum(eigenvalues, np.finfo(np.float64).tiny))
    return (eigenvectors * values) @ eigenvectors.conj().T


def _scalar_checks(phi, grid: np.ndarray) -> OrderCertificate | None:
    values = phi(grid)
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        return OrderCertificate(OrderStatus.INCONCLUSIVE, detail="φ 在网格上非有限或非正")

    normalization = abs(float(phi(1.0)) - 1.0)
    if normalization > _SCALAR_TOL:
        return OrderCertificate(OrderStatus.FAILS, witness=1.0,
                                detail=f"φ(1) - 1 = {normalization:.3e}")

    scale = np.maximum(1.0, values)
    symmetry = np.abs(grid * phi(1.0 / grid) - values) / scale
    if np.max(symmetry) > 1e-8:
        i = int(np.argmax(symmetry))
        return OrderCertificate(OrderStatus.FAILS, witness=float(grid[i]),
                                detail=f"对称残差 {symmetry[i]:.3e}")

    steps = np.diff(values)
    bad = np.nonzero(steps < -_SCALAR_TOL * scale[1:])[0]
    if bad.size:
        i = int(bad[0])
        return OrderCertificate(OrderStatus.FAILS, witness=(float(grid[i]), float(grid[i + 1])),
                                detail="φ 在标量上不单调")

    lower = 2.0 * grid / (grid + 1.0)
    upper = (grid + 1.0) / 2.0
    outside = (values < lower - _SCALAR_TOL * scale) | (values > upper + _SCALAR_TOL * scale)
    if np.any(outside):
        i = int(np.nonzero(outside)[0][0])
        return OrderCertificate(OrderStatus.FAILS, witness=float(grid[i]),
                                detail=f"φ({grid[i]:.3g}) = {values[i]:.6g} 超出 [f_min, f_max]")
    return None


def majorizes(f: MonotoneFunction, g: MonotoneFunction, n_pairs: int | None = None,
              seed: int = 0, max_dim: int | None = None) -> OrderCertificate:
    """
    抽样检验 f ⪯ g

    Args:
        f, g: F_op 中的函数
        n_pairs: 随机矩阵对数，默认 settings.order_n_pairs
        seed: 矩阵对的随机种子
        max_dim: 矩阵最大维度，默认 settings.order_max_dim

    Returns:
        OrderCertificate，FAILS 时附反例
    """
    n_pairs = settings.order_n_pairs if n_pairs is None else n_pairs
    max_dim = settings.order_max_dim if max_dim is None else max_dim
    min_dim = min(settings.order_min_dim, max_dim)
    slack = settings.order_slack
    phi = _ratio_function(f, g)

    try:
        scalar = _scalar_checks(phi, log_grid())
        if scalar is not None:
            logger.info("[fcatalog] %s ⪯ %s: %s (%s)", f.name, g.name,
                        scalar.status.value, scalar.detail)
            return scalar

        rng = np.random.default_rng(seed)
        for k in range(n_pairs):
            dim = int(rng.integers(min_dim, max_dim + 1))
            scale = float(np.exp(rng.uniform(-3.0, 3.0)))
            a = scale * (_random_psd(rng, dim, dim) + 1e-3 * np.eye(dim))
            p = scale * _random_psd(rng, dim, int(rng.integers(1, dim + 1)))
            b = a + p
            diff = _apply(phi, b) - _apply(phi, a)
            gap = float(np.linalg.eigvalsh((diff + diff.conj().T) / 2)[0])
            if not np.isfinite(gap):
                return OrderCertificate(OrderStatus.INCONCLUSIVE,
                                        detail=f"第 {k} 组矩阵上 φ 非有限")
            if gap < -slack:
                logger.info("[fcatalog] %s ⪯ %s: fails, 第 %d 组矩阵 λ_min(φ(B)-φ(A)) = %.3e",
                            f.name, g.name, k, gap)
                return OrderCertificate(OrderStatus.FAILS, witness=(a, b),
                                        detail=f"λ_min(φ(B) - φ(A)) = {gap:.3e}")
    except GeometryError as exc:
        logger.warning("[fcatalog] %s ⪯ %s 检验中断: %s", f.name, g.name, exc)
        return OrderCertificate(OrderStatus.INCONCLUSIVE, detail=str(exc))

    return OrderCertificate(OrderStatus.HOLDS, detail=f"{n_pairs} 组矩阵均满足")


def _require_weights(f: MonotoneFunction, g: MonotoneFunction, op: str) -> None:
    for fn in (f, g):
        if fn.weight is None:
            raise MissingWeight(f"{op}: {fn.name} 没有权重函数")


def lattice_meet(f: MonotoneFunction, g: MonotoneFunction) -> MonotoneFunction:
    """f ∧ g，权重取 max{h_f, h_g}；任一参数 non-regular 时结果 non-regular"""
    _require_weights(f, g, "lattice_meet")
    return from_weight(pointwise_max(f.weight, g.weight),
                       name=f"meet({f.name},{g.name})",
                       regular=f.regular and g.regular)


def lattice_join(f: MonotoneFunction, g: MonotoneFunction) -> MonotoneFunction:
    """f ∨ g，权重取 min{h_f, h_g}；任一参数 regular 时结果 regular"""
    _require_weights(f, g, "lattice_join")
    regular = True if (f.regular or g.regular) else None
    return from_weight(pointwise_min(f.weight, g.weight),
                       name=f"join({f.name},{g.name})",
                       regular=regular)
