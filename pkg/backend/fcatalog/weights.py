"""
权重函数表示
f(t) = (1+t)/2 · exp ∫₀¹ (λ²-1)(1-t)² / ((λ+t)(1+λt)(1+λ)²) · h(λ) dλ

积分在 log-λ 变量下进行（λ = e^u），被积函数在 λ ≈ t 处的尖峰在 u 空间中宽度为 O(1)
"""

import logging
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.integrate import quad

from backend.config import settings
from backend.errors import NotInClass, QuadratureFailure, WeightOutOfRange

from .checks import check_membership, log_grid
from .schema import MonotoneFunction, WeightFunction

logger = logging.getLogger(__name__)

# 尖峰以下再向左延伸的 u 距离，之后交给无穷区间积分
_TAIL_OFFSET = 8.0

# 正则性判定：∫_ε^1 h/λ dλ 在 ε ∈ {1e-4, 1e-6, 1e-8} 上的增量
_REGULARITY_EPS = (1e-4, 1e-6, 1e-8)
_GROWTH_RATIO = 0.9
_GROWTH_FLOOR = 1e-3


# ---------------------------------------------------------------------------
# 常用权重函数
# ---------------------------------------------------------------------------


def zero_weight() -> WeightFunction:
    """h ≡ 0，对应 f_max"""
    return WeightFunction(name="0", fn=lambda lam: np.zeros_like(lam))


def constant_weight(alpha: float) -> WeightFunction:
    """h ≡ α，对应桥函数 f_α"""
    alpha = float(alpha)
    return WeightFunction(name=f"{alpha:g}", fn=lambda lam: np.full_like(lam, alpha))


def wyd_weight(p: float) -> WeightFunction:
    """WYD 函数 f_p 的 arctan 权重 h_p"""
    p = float(p)
    sin_p = np.sin(p * np.pi)
    cos_p = np.cos(p * np.pi)

    def fn(lam):
        lam_p = lam ** p
        lam_q = lam ** (1.0 - p)
        num = (lam_p + lam_q) * sin_p
        den = 1.0 - lam - (lam_p - lam_q) * cos_p
        return np.arctan2(num, den) / np.pi

    return WeightFunction(name=f"h_wyd({p:g})", fn=fn)


def step_weight(p: float) -> WeightFunction:
    """变体桥的阶梯权重：λ < 1-p 取 0，λ ≥ 1-p 取 p"""
    p = float(p)
    cut = 1.0 - p
    breakpoints = (cut,) if 0.0 < cut < 1.0 else ()
    return WeightFunction(
        name=f"step({p:g})",
        fn=lambda lam: np.where(lam >= cut, p, 0.0),
        breakpoints=breakpoints,
    )


def pointwise_max(h1: WeightFunction, h2: WeightFunction) -> WeightFunction:
    return WeightFunction(
        name=f"max({h1.name},{h2.name})",
        fn=lambda lam: np.maximum(h1(lam), h2(lam)),
        breakpoints=tuple(sorted(set(h1.breakpoints) | set(h2.breakpoints))),
    )


def pointwise_min(h1: WeightFunction, h2: WeightFunction) -> WeightFunction:
    return WeightFunction(
        name=f"min({h1.name},{h2.name})",
        fn=lambda lam: np.minimum(h1(lam), h2(lam)),
        breakpoints=tuple(sorted(set(h1.breakpoints) | set(h2.breakpoints))),
    )


# ---------------------------------------------------------------------------
# 数值积分
# ---------------------------------------------------------------------------


def _as_weight(h) -> WeightFunction:
    if isinstance(h, WeightFunction):
        return h
    name = getattr(h, "__name__", "h")
    return WeightFunction(name=name, fn=h, breakpoints=tuple(getattr(h, "breakpoints", ())))


def validate_weight(h: WeightFunction, tol: float = 1e-12) -> None:
    """在 [0,1] 上抽样检查 h 取值在 [0, 1] 内"""
    lam = np.unique(np.concatenate([np.linspace(0.0, 1.0, 1025), np.logspace(-12, 0, 241)]))
    values = h(lam)
    bad = ~np.isfinite(values) | (values < -tol) | (values > 1.0 + tol)
    if np.any(bad):
        i = int(np.nonzero(bad)[0][0])
        raise WeightOutOfRange(f"权重 {h.name} 在 λ={lam[i]:.6g} 处取值 {values[i]!r} 不在 [0, 1] 内")


def _canonical_kernel(lam: float, t: float) -> float:
    return (lam * lam - 1.0) * (1.0 - t) ** 2 / ((lam + t) * (1.0 + lam * t) * (1.0 + lam) ** 2)


def _integrate_log(integrand: Callable[[float], float], cuts: list[float],
                   epsabs: float, limit: int) -> tuple[float, float]:
    """
    ∫_{-∞}^{0} integrand(u) du，按 cuts 分段（cuts 为 (-∞, 0) 内的有限点）

    Returns:
        (积分值, 误差估计之和)
    """
    edges = sorted(c for c in set(cuts) if c < 0.0)
    bounds = [-np.inf] + edges + [0.0]
    pieces = len(bounds) - 1
    total = 0.0
    error = 0.0
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        value, err = quad(integrand, lo, hi, epsabs=epsabs / pieces, epsrel=0.0, limit=limit)
        total += value
        error += err
    return total, error


def canonical_exponent(h: WeightFunction, t: float,
                       epsabs: float | None = None, limit: int | None = None) -> tuple[float, float]:
    """
    规范表示的指数 ∫₀¹ g(λ, t) h(λ) dλ

    利用 g(λ, t) = g(λ, 1/t)，只在 t ≤ 1 一侧积分

    Returns:
        (指数值, 误差估计)
    """
    epsabs = settings.quad_epsabs if epsabs is None else epsabs
    limit = settings.quad_limit if limit is None else limit
    t = float(t)
    t = min(t, 1.0 / t)
    if t == 1.0:
        return 0.0, 0.0

    def integrand(u: float) -> float:
        lam = np.exp(u)
        return _canonical_kernel(lam, t) * float(h(lam)) * lam

    u_feature = np.log(t)
    cuts = [u_feature - _TAIL_OFFSET, u_feature]
    cuts += [np.log(b) for b in h.breakpoints if 0.0 < b < 1.0]
    return _integrate_log(integrand, cuts, epsabs, limit)


def _log_integral(h: WeightFunction, lo: float, hi: float, limit: int) -> float:
    """∫_{lo}^{hi} h(λ)/λ dλ = ∫ h(e^u) du"""
    value, _ = quad(lambda u: float(h(np.exp(u))), np.log(lo), np.log(hi), limit=limit)
    return value


def is_regular_weight(h: WeightFunction, limit: int | None = None) -> bool:
    """
    启发式判定 ∫₀¹ h(λ)/λ dλ 是否收敛

    不可积权重在 log(1/ε) 上线性增长，可积权重的增量按 ε 的幂次衰减
    """
    limit = settings.quad_limit if limit is None else limit
    e1, e2, e3 = _REGULARITY_EPS
    d1 = _log_integral(h, e2, e1, limit)
    d2 = _log_integral(h, e3, e2, limit)
    divergent = d2 > _GROWTH_FLOOR and d2 >= _GROWTH_RATIO * d1
    logger.debug("[fcatalog] %s 正则性检验增量 d1=%.3e d2=%.3e → %s",
                 h.name, d1, d2, "non-regular" if divergent else "regular")
    return not divergent


def weight_f_at_zero(h: WeightFunction, epsabs: float | None = None,
                     limit: int | None = None) -> float:
    """
    f(0) = ½ exp ∫₀¹ (λ-1)/(λ(1+λ)) h(λ) dλ，仅对 regular 权重有意义
    """
    epsabs = settings.quad_epsabs if epsabs is None else epsabs
    limit = settings.quad_limit if limit is None else limit

    def integrand(u: float) -> float:
        lam = np.exp(u)
        return (lam - 1.0) / (1.0 + lam) * float(h(lam))

    cuts = [-20.0] + [np.log(b) for b in h.breakpoints if 0.0 < b < 1.0]
    value, err = _integrate_log(integrand, cuts, epsabs, limit)
    if err > epsabs:
        raise QuadratureFailure(f"f(0) 积分误差 {err:.2e} 超过 {epsabs:.1e} (权重 {h.name})")
    return 0.5 * float(np.exp(value))


def from_weight(h, name: str | None = None, regular: bool | None = None,
                epsabs: float | None = None, limit: int | None = None) -> MonotoneFunction:
    """
    由权重函数构造 F_op 中的函数

    Args:
        h: 权重函数（WeightFunction 或可调用对象），取值 [0, 1]
        name: 函数名，默认 "weight(<h.name>)"
        regular: 强制指定正则性；None 时用积分增量启发式判定
        epsabs: 积分目标绝对误差，默认 settings.quad_epsabs
        limit: quad 子区间上限

    Raises:
        WeightOutOfRange: h 抽样取值越界
        QuadratureFailure: 求值时积分误差估计超过 epsabs
        NotInClass: 构造结果未通过 F_op 抽样检验
    """
    h = _as_weight(h)
    validate_weight(h)
    epsabs = settings.quad_epsabs if epsabs is None else epsabs
    limit = settings.quad_limit if limit is None else limit
    name = name or f"weight({h.name})"

    @lru_cache(maxsize=8192)
    def exponent(t_sym: float) -> float:
        value, err = canonical_exponent(h, t_sym, epsabs=epsabs, limit=limit)
        if err > epsabs:
            raise QuadratureFailure(f"{name}: t={t_sym:.6g} 处积分误差 {err:.2e} 超过 {epsabs:.1e}")
        return value

    def scalar_eval(t: float) -> float:
        t_sym = min(t, 1.0 / t)
        return 0.5 * (1.0 + t) * float(np.exp(exponent(float(t_sym))))

    vector_eval = np.vectorize(scalar_eval, otypes=[np.float64])

    if regular is None:
        regular = is_regular_weight(h, limit=limit)
    f_at_zero = weight_f_at_zero(h, epsabs=epsabs, limit=limit) if regular else 0.0

    f = MonotoneFunction(name=name, eval=vector_eval, f_at_zero=f_at_zero, weight=h)
    report = check_membership(f, grid=log_grid(n=21))
    if not report.passed(norm_tol=1e-8, sym_tol=1e-8):
        raise NotInClass(f"{name} 未通过 F_op 抽样检验: {report}")
    logger.info("[fcatalog] 由权重 %s 构造 %s, f(0)=%.6g, regular=%s",
                h.name, name, f_at_zero, f.regular)
    return f
