"""
信息量模块 — f-协方差、单调度量、度量调整斜信息
"""

from .covariance import f_covariance, f_variance, qfi_metric, variance
from .schema import EvalPath, MeasureReport
from .skew import (skew_information, skew_information_sesquilinear, skew_weights,
                   wigner_yanase_dyson)
