"""
f-LQU 模块 — 度量调整局域量子不确定度、LQU、干涉功率
"""

from .measures import (SWEEP_FAMILIES, brute_force_lqu, f_lqu, interferometric_power,
                       is_classical_quantum, local_cost, local_lower_bound, lqu, sweep,
                       sweep_parameters)
from .optimizer import multi_start, pattern_search, pick_best, su_basis
from .schema import LquResult, OptimizerConfig, StartOutcome
