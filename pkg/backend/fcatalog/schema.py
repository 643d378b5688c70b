"""
schema.py — F_op 函数类的数据结构
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from backend.errors import ParameterOutOfRange


@dataclass(frozen=True)
class WeightFunction:
    """规范表示中的权重函数 h: [0,1] → [0,1]

    breakpoints: 不连续点，数值积分时作为分段点
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    breakpoints: tuple[float, ...] = ()

    def __call__(self, lam):
        lam = np.asarray(lam, dtype=np.float64)
        return np.broadcast_to(self.fn(lam), lam.shape).astype(np.float64)


@dataclass(frozen=True)
class MonotoneFunction:
    """F_op 中的元素：归一化、对称的算子单调函数

    f_at_zero 为解析极限 f(0)；regular 由 f_at_zero > 0 决定，不可单独指定
    """

    name: str
    eval: Callable[[np.ndarray], np.ndarray]
    f_at_zero: float
    weight: WeightFunction | None = None
    regular: bool = field(init=False)

    def __post_init__(self):
        if not np.isfinite(self.f_at_zero) or self.f_at_zero < 0:
            raise ParameterOutOfRange(f"{self.name}: f(0) 必须为有限非负数: {self.f_at_zero}")
        object.__setattr__(self, "regular", bool(self.f_at_zero > 0))

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        return np.asarray(self.eval(t), dtype=np.float64)

    def extended(self, t) -> np.ndarray:
        """在 [0, ∞) 上求值，t = 0 处取 f(0)"""
        t = np.asarray(t, dtype=np.float64)
        safe = np.where(t > 0, t, 1.0)
        return np.where(t > 0, self(safe), self.f_at_zero)

    def scalar_mean(self, x, y) -> np.ndarray:
        """
        标量平均 m_f(x, y) = y f(x/y)，含零点连续延拓
        m_f(0, y) = f(0) y, m_f(x, 0) = f(0) x, m_f(0, 0) = 0
        """
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.float64),
                                   np.asarray(y, dtype=np.float64))
        hi = np.maximum(x, y)
        lo = np.minimum(x, y)
        ratio = np.divide(lo, hi, out=np.zeros_like(hi), where=hi > 0)
        return np.where(hi > 0, hi * self.extended(ratio), 0.0)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SpectrumLambda:
    """f-LQU 中固定的谱向量 Λ"""

    values: tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ParameterOutOfRange("谱向量 Λ 不能为空")
        if not all(np.isfinite(values)):
            raise ParameterOutOfRange(f"谱向量 Λ 含非有限值: {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Sequence[float] | SpectrumLambda) -> SpectrumLambda:
        if isinstance(values, SpectrumLambda):
            return values
        return cls(values=tuple(values))

    @classmethod
    def default(cls, d1: int) -> SpectrumLambda:
        """(1, 2, …, d1) 平移为零均值"""
        base = np.arange(1, d1 + 1, dtype=np.float64)
        return cls(values=tuple(base - base.mean()))

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.float64)

    @property
    def non_degenerate(self) -> bool:
        v = np.sort(self.as_array())
        return bool(np.all(np.diff(v) > 1e-9))


@dataclass(frozen=True)
class MembershipReport:
    """F_op 成员资格的抽样检验结果"""

    normalization_residual: float
    symmetry_residual: float
    monotone: bool
    witness: tuple[float, float] | None = None

    def passed(self, norm_tol: float = 1e-12, sym_tol: float = 1e-10) -> bool:
        return (self.normalization_residual <= norm_tol
                and self.symmetry_residual <= sym_tol
                and self.monotone)


class OrderStatus(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OrderCertificate:
    """majorizes 的三值结果

    witness: FAILS 时的反例；标量反例为 t 或 (t_i, t_{i+1})，矩阵反例为 (A, B)
    """

    status: OrderStatus
    witness: object | None = None
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status is OrderStatus.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is OrderStatus.FAILS
