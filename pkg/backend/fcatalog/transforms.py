"""
regular 函数的变换
f̃(x) = ½[(x+1) - (x-1)² f(0)/f(x)]     （F_op^r → F_op^n 的双射）
f̌(t) = f(0)/f(t)
"""

from typing import Callable

import numpy as np

from backend.errors import NotRegular

from .schema import MonotoneFunction


def _require_regular(f: MonotoneFunction, op: str) -> None:
    if not f.regular:
        raise NotRegular(f"{op} 要求 regular 函数，{f.name} 的 f(0) = 0")


def f_tilde(f: MonotoneFunction) -> MonotoneFunction:
    """f ↦ f̃，结果 non-regular（f̃(0) = 0）"""
    _require_regular(f, "f_tilde")
    f0 = f.f_at_zero

    def fn(x):
        return 0.5 * ((x + 1.0) - (x - 1.0) ** 2 * f0 / f(x))

    return MonotoneFunction(name=f"tilde({f.name})", eval=fn, f_at_zero=0.0)


def f_check(f: MonotoneFunction) -> Callable[[np.ndarray], np.ndarray]:
    """f ↦ f̌，f̌(0) = 1, f̌(1) = f(0)"""
    _require_regular(f, "f_check")
    f0 = f.f_at_zero

    def check(t):
        t = np.asarray(t, dtype=np.float64)
        return f0 / f.extended(t)

    check.__name__ = f"check({f.name})"
    return check
