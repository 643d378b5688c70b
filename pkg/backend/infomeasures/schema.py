"""
schema.py — 信息量计算结果
"""

from dataclasses import dataclass
from enum import Enum


class EvalPath(str, Enum):
    COMMUTATOR_KERNEL = "commutator_kernel"
    VARIANCE_DIFFERENCE = "variance_difference"


@dataclass(frozen=True)
class MeasureReport:
    """一次度量求值：value 取自 path，cross_residual 为两条路径之差"""

    value: float
    path: EvalPath
    cross_residual: float
