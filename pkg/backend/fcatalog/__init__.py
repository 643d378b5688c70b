"""
算子单调函数类 F_op — 内置目录、变换、权重表示、优超序与格
"""

from .catalog import available_names, catalog, parse_function_spec
from .checks import check_membership, log_grid
from .order import lattice_join, lattice_meet, majorizes
from .schema import (MembershipReport, MonotoneFunction, OrderCertificate,
                     OrderStatus, SpectrumLambda, WeightFunction)
from .transforms import f_check, f_tilde
from .weights import (canonical_exponent, constant_weight, from_weight,
                      is_regular_weight, pointwise_max, pointwise_min,
                      step_weight, weight_f_at_zero, wyd_weight, zero_weight)
