"""
超算子模块 — ρ 本征基下的 Mean / Morozova / Check 核表
"""

from .kernels import apply_kernel, degenerate_mask, kernel_table, mean_table
from .schema import KernelKind, KernelTable
