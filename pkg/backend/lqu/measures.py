"""
度量调整局域量子不确定度 (f-LQU)

U^{Λ,f}(ρ₁₂) = min { I^f_ρ(K₁ ⊗ 1₂) | K₁ 的谱为 Λ }
LQU 取 f = wy，干涉功率 (IP) 取 f = sld
"""

import logging
from typing import Sequence

import numpy as np

from backend.errors import DimensionMismatch, NotRegular, ParameterOutOfRange, UnsupportedDimension
from backend.fcatalog import MonotoneFunction, SpectrumLambda, catalog
from backend.infomeasures import skew_weights
from backend.matcore import BipartiteState, Observable, partial_trace

from .optimizer import multi_start, pick_best
from .schema import LquResult, OptimizerConfig

logger = logging.getLogger(__name__)

SWEEP_FAMILIES = ("wyd", "bridge", "variant_bridge")


def _resolve_lambda(lam, d1: int) -> SpectrumLambda:
    lam = SpectrumLambda.default(d1) if lam is None else SpectrumLambda.of(lam)
    if len(lam) != d1:
        raise DimensionMismatch(f"|Λ| = {len(lam)} 与 d1 = {d1} 不符")
    return lam


def local_cost(f: MonotoneFunction, s: BipartiteState):
    """返回 K₁ ↦ I^f_ρ(K₁ ⊗ 1₂)，权重表只计算一次"""
    table = skew_weights(f, s.state)
    weights = table.table
    # V 的行按 (a, c) 分块，a 属子系统 1，c 属子系统 2
    v = table.eigenvectors.reshape(s.d1, s.d2, -1)
    v_conj = v.conj()

    def cost(k1: np.ndarray) -> float:
        k_tilde = np.einsum("aci,ab,bcj->ij", v_conj, k1, v, optimize=False)
        return float(np.sum(weights * np.abs(k_tilde) ** 2))

    return cost


def f_lqu(f: MonotoneFunction, s: BipartiteState, lam=None,
          cfg: OptimizerConfig | None = None) -> LquResult:
    """
    f-LQU：在 diag(Λ) 的酉轨道上最小化 I^f_ρ(K₁ ⊗ 1₂)

    Args:
        f: regular 函数
        s: 两体态
        lam: 谱向量 Λ，缺省为零均值化的 (1, …, d1)
        cfg: 优化配置

    Raises:
        NotRegular: f(0) = 0
        DimensionMismatch: |Λ| ≠ d1
    """
    if not f.regular:
        raise NotRegular(f"f-LQU 要求 regular 函数: {f.name}")
    cfg = cfg or OptimizerConfig()
    lam = _resolve_lambda(lam, s.d1)
    diag = np.diag(lam.as_array()).astype(np.complex128)
    cost = local_cost(f, s)

    def cost_of_unitary(u: np.ndarray) -> float:
        return cost(u @ diag @ u.conj().T)

    outcomes = multi_start(cost_of_unitary, s.d1, cfg)
    best = pick_best(outcomes)
    values = np.array([o.value for o in outcomes])

    if len(outcomes) > 1:
        ordered = np.sort(values)
        converged = bool(ordered[1] - ordered[0] <= 10 * cfg.tol)
    else:
        converged = best.converged

    k1 = best.unitary @ diag @ best.unitary.conj().T
    result = LquResult(
        value=max(best.value, 0.0),
        minimizer=Observable.from_array((k1 + k1.conj().T) / 2),
        starts=cfg.n_starts,
        best_start_index=best.index,
        converged=converged,
        spread=float(values.max() - values.min()),
        function_name=f.name,
        start_values=tuple(float(v) for v in values),
    )
    logger.info("[lqu] %s f=%s value=%.12g spread=%.3e converged=%s",
                s.label or "state", f.name, result.value, result.spread, result.converged)
    return result


def lqu(s: BipartiteState, lam=None, cfg: OptimizerConfig | None = None) -> LquResult:
    """局域量子不确定度（Wigner-Yanase）"""
    return f_lqu(catalog("wy"), s, lam, cfg)


def interferometric_power(s: BipartiteState, lam=None,
                          cfg: OptimizerConfig | None = None) -> LquResult:
    """干涉功率（SLD）"""
    return f_lqu(catalog("sld"), s, lam, cfg)


def brute_force_lqu(f: MonotoneFunction, s: BipartiteState, lam=None,
                    grid_density: int = 200) -> float:
    """
    d1 = 2 时在 Bloch 球网格上穷举：θ ∈ [0, π]，φ ∈ [0, π)（K 与 -K 方向等价）

    Raises:
        UnsupportedDimension: d1 ≠ 2
    """
    if s.d1 != 2:
        raise UnsupportedDimension(f"brute_force_lqu 只支持 d1 = 2: d1 = {s.d1}")
    if grid_density < 2:
        raise ParameterOutOfRange(f"grid_density 必须 ≥ 2: {grid_density}")
    if not f.regular:
        raise NotRegular(f"f-LQU 要求 regular 函数: {f.name}")
    lam = _resolve_lambda(lam, 2).as_array()

    table = skew_weights(f, s.state)
    weights = table.table
    v = table.eigenvectors.reshape(2, s.d2, -1)
    thetas = np.linspace(0.0, np.pi, grid_density)
    phis = np.linspace(0.0, np.pi, grid_density, endpoint=False)

    best = np.inf
    for theta in thetas:
        c = np.cos(theta / 2.0)
        sn = np.sin(theta / 2.0)
        phase = np.exp(1j * phis)
        # U(θ, φ) = [[c, -e^{-iφ} s], [e^{iφ} s, c]]
        u = np.empty((phis.size, 2, 2), dtype=np.complex128)
        u[:, 0, 0] = c
        u[:, 0, 1] = -phase.conj() * sn
        u[:, 1, 0] = phase * sn
        u[:, 1, 1] = c
        k1 = np.einsum("gab,b,gcb->gac", u, lam, u.conj())
        k_tilde = np.einsum("aci,gab,bcj->gij", v.conj(), k1, v)
        values = np.einsum("ij,gij->g", weights, np.abs(k_tilde) ** 2)
        best = min(best, float(values.min()))
    return max(best, 0.0)


def is_classical_quantum(s: BipartiteState, tol: float = 1e-6,
                         cfg: OptimizerConfig | None = None) -> bool:
    """f_lqu(wy, ρ, Λ = (1, …, d1)) < tol；Λ 非简并"""
    lam = SpectrumLambda.of(np.arange(1, s.d1 + 1, dtype=np.float64))
    return f_lqu(catalog("wy"), s, lam, cfg).value < tol


def local_lower_bound(f: MonotoneFunction, s: BipartiteState, lam=None,
                      cfg: OptimizerConfig | None = None) -> LquResult:
    """
    偏迹下界 min_{K₁} I^f_{ρ₁}(K₁)，ρ₁ = Tr₂ ρ₁₂，恒有 f_lqu(ρ₁₂) ≥ 该值
    """
    reduced = BipartiteState(state=partial_trace(s, keep=1), d1=s.d1, d2=1, label=s.label)
    return f_lqu(f, reduced, lam, cfg)


def sweep_parameters(family: str, k: int, lo: float | None = None,
                     hi: float | None = None) -> list[float]:
    """
    扫描参数网格（升序）

    缺省取内点 p_i = i/(k+1)，i = 1..k；给出 lo 或 hi 时改为 [lo, hi] 等分 k 点
    """
    if family not in SWEEP_FAMILIES:
        raise ParameterOutOfRange(f"不支持的函数族: {family}（可用: {', '.join(SWEEP_FAMILIES)}）")
    if k < 2:
        raise ParameterOutOfRange(f"网格点数必须 ≥ 2: {k}")
    if lo is None and hi is None:
        return [i / (k + 1) for i in range(1, k + 1)]
    lo = 0.0 if lo is None else float(lo)
    hi = 1.0 if hi is None else float(hi)
    if not lo < hi:
        raise ParameterOutOfRange(f"参数区间非法: [{lo}, {hi}]")
    return [float(p) for p in np.linspace(lo, hi, k)]


def sweep(family: str, k: int, s: BipartiteState, lam=None,
          cfg: OptimizerConfig | None = None, lo: float | None = None,
          hi: float | None = None) -> list[tuple[float, LquResult]]:
    """
    沿函数族参数扫描 f-LQU，参数升序

    Raises:
        NotRegular: 网格中存在 non-regular 成员（在任何计算之前检查）
    """
    params = sweep_parameters(family, k, lo, hi)
    members: Sequence[MonotoneFunction] = [catalog(family, p) for p in params]
    irregular = [f.name for f in members if not f.regular]
    if irregular:
        raise NotRegular(f"扫描网格包含 non-regular 成员: {', '.join(irregular)}")
    return [(p, f_lqu(f, s, lam, cfg)) for p, f in zip(params, members)]
