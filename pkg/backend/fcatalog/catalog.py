"""
F_op 内置函数目录

可去奇点（t = 1 附近的 0/0）在 |t - 1| < series_radius 时走级数分支
"""

import logging
import re
from typing import Callable

import numpy as np

from backend.config import settings
from backend.errors import ParameterOutOfRange, UnknownName

from .schema import MonotoneFunction
from .weights import constant_weight, step_weight, wyd_weight, zero_weight

logger = logging.getLogger(__name__)


def _expm1_ratio(x: np.ndarray) -> np.ndarray:
    """E(x) = (e^x - 1)/x，E(0) = 1"""
    x = np.asarray(x, dtype=np.float64)
    small = np.abs(x) < settings.series_radius
    safe = np.where(small, 1.0, x)
    series = 1.0 + x / 2.0 + x * x / 6.0 + x ** 3 / 24.0
    return np.where(small, series, np.expm1(safe) / safe)


# ---------------------------------------------------------------------------
# 求值函数
# ---------------------------------------------------------------------------


def _sld(t):
    return (1.0 + t) / 2.0


def _wy(t):
    return ((np.sqrt(t) + 1.0) / 2.0) ** 2


def _harmonic(t):
    return 2.0 * t / (t + 1.0)


def _geometric(t):
    return np.sqrt(t)


def _kubo_mori(t):
    u = t - 1.0
    small = np.abs(u) < settings.series_radius
    safe = np.where(small, 2.0, t)
    series = 1.0 / (1.0 - u / 2.0 + u * u / 3.0 - u ** 3 / 4.0)
    return np.where(small, series, (safe - 1.0) / np.log(safe))


def _make_wyd(p: float) -> Callable:
    # f_p(t) = p(1-p)(t-1)²/((t^p-1)(t^{1-p}-1)) = E(s)²/(E(ps)E((1-p)s)), s = log t
    def fn(t):
        s = np.log(t)
        return _expm1_ratio(s) ** 2 / (_expm1_ratio(p * s) * _expm1_ratio((1.0 - p) * s))
    return fn


def _make_wyd_mean(beta: float) -> Callable:
    def fn(t):
        return (t ** beta + t ** (1.0 - beta)) / 2.0
    return fn


def _make_bridge(alpha: float) -> Callable:
    def fn(t):
        return np.exp(alpha * np.log(t) + (1.0 - 2.0 * alpha) * np.log((1.0 + t) / 2.0))
    return fn


def _make_variant_bridge(p: float) -> Callable:
    a = 1.0 - p

    def fn(t):
        ratio = 4.0 * (a + t) * (1.0 + a * t) / ((1.0 + t) ** 2 * (1.0 + a) ** 2)
        return (1.0 + t) / 2.0 * ratio ** p
    return fn


# ---------------------------------------------------------------------------
# 目录
# ---------------------------------------------------------------------------

_ALIASES = {
    "arithmetic": "sld",
    "f_max": "sld",
    "f_min": "harmonic",
    "logarithmic": "kubo_mori",
}

_FAMILIES = ("wyd", "bridge", "variant_bridge", "wyd_mean")


def _check_open(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ParameterOutOfRange(f"{name} 参数必须在 (0, 1) 内: {value}")


def _check_closed(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterOutOfRange(f"{name} 参数必须在 [0, 1] 内: {value}")


def available_names() -> list[str]:
    return sorted({"sld", "wy", "kubo_mori", "harmonic", "geometric", *_ALIASES, *_FAMILIES})


def catalog(name: str, param: float | None = None) -> MonotoneFunction:
    """
    按名称取内置函数

    Args:
        name: sld / arithmetic / f_max / wy / wyd / kubo_mori / logarithmic /
              harmonic / f_min / geometric / bridge / variant_bridge / wyd_mean
        param: 函数族参数（wyd 的 p、bridge 的 α、variant_bridge 的 p、wyd_mean 的 β）

    Raises:
        UnknownName: 名称不存在
        ParameterOutOfRange: 参数缺失、多余或越界
    """
    key = _ALIASES.get(name, name)

    if key in _FAMILIES:
        if param is None:
            raise ParameterOutOfRange(f"{name} 需要参数")
        param = float(param)
    elif param is not None:
        if key in {"sld", "wy", "kubo_mori", "harmonic", "geometric"}:
            raise ParameterOutOfRange(f"{name} 不接受参数: {param}")

    if key == "sld":
        return MonotoneFunction(name="sld", eval=_sld, f_at_zero=0.5, weight=zero_weight())
    if key == "wy":
        return MonotoneFunction(name="wy", eval=_wy, f_at_zero=0.25, weight=wyd_weight(0.5))
    if key == "harmonic":
        return MonotoneFunction(name="harmonic", eval=_harmonic, f_at_zero=0.0,
                                weight=constant_weight(1.0))
    if key == "geometric":
        return MonotoneFunction(name="geometric", eval=_geometric, f_at_zero=0.0,
                                weight=constant_weight(0.5))
    if key == "kubo_mori":
        return MonotoneFunction(name="kubo_mori", eval=_kubo_mori, f_at_zero=0.0)

    if key == "wyd":
        _check_open("wyd", param)
        return MonotoneFunction(name=f"wyd({param:g})", eval=_make_wyd(param),
                                f_at_zero=param * (1.0 - param), weight=wyd_weight(param))
    if key == "wyd_mean":
        _check_open("wyd_mean", param)
        return MonotoneFunction(name=f"wyd_mean({param:g})", eval=_make_wyd_mean(param),
                                f_at_zero=0.0)
    if key == "bridge":
        _check_closed("bridge", param)
        return MonotoneFunction(name=f"bridge({param:g})", eval=_make_bridge(param),
                                f_at_zero=0.5 if param == 0.0 else 0.0,
                                weight=constant_weight(param))
    if key == "variant_bridge":
        _check_closed("variant_bridge", param)
        a = 1.0 - param
        f_at_zero = 0.5 * (4.0 * a / (1.0 + a) ** 2) ** param if a > 0 else 0.0
        return MonotoneFunction(name=f"variant_bridge({param:g})",
                                eval=_make_variant_bridge(param),
                                f_at_zero=f_at_zero, weight=step_weight(param))

    raise UnknownName(f"未知函数名: {name}（可用: {', '.join(available_names())}）")


_SPEC_PATTERN = re.compile(r"^\s*([a-z_]+)\s*(?:[:(]\s*([-+0-9.eE]+)\s*\)?)?\s*$")


def parse_function_spec(spec: str) -> MonotoneFunction:
    """解析 "name" / "name:param" / "name(param)" 形式的函数描述"""
    match = _SPEC_PATTERN.match(spec)
    if not match:
        raise UnknownName(f"无法解析函数描述: {spec!r}")
    name, raw_param = match.groups()
    param = float(raw_param) if raw_param is not None else None
    return catalog(name, param)
