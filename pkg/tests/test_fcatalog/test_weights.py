"""
测试权重函数表示 from_weight — 数值积分与解析目录对照
"""

import os
import sys
from unittest.mock import patch

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np
import pytest

from backend.errors import NotInClass, WeightOutOfRange
from backend.fcatalog import (catalog, constant_weight, from_weight, is_regular_weight,
                              step_weight, wyd_weight, zero_weight)
from backend.fcatalog.schema import WeightFunction

T_PROBE = np.array([0.1, 0.5, 2.0, 10.0])


def test_zero_weight_is_f_max():
    f = from_weight(zero_weight())
    grid = np.logspace(-4, 4, 17)
    np.testing.assert_allclose(f(grid), (1 + grid) / 2, rtol=0, atol=1e-8 * 1e4)
    np.testing.assert_allclose(f(T_PROBE), (1 + T_PROBE) / 2, rtol=0, atol=1e-8)
    assert f.regular
    assert f.f_at_zero == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0])
def test_constant_weight_is_bridge(alpha):
    f = from_weight(constant_weight(alpha))
    np.testing.assert_allclose(f(T_PROBE), catalog("bridge", alpha)(T_PROBE), rtol=0, atol=1e-6)
    assert f.regular == (alpha == 0.0)


@pytest.mark.parametrize("p", [0.25, 0.5])
def test_wyd_weight_round_trip(p):
    f = from_weight(wyd_weight(p))
    np.testing.assert_allclose(f(T_PROBE), catalog("wyd", p)(T_PROBE), rtol=0, atol=1e-6)
    assert f.regular
    assert f.f_at_zero == pytest.approx(p * (1 - p), abs=1e-6)


@pytest.mark.parametrize("p", [0.3, 0.8])
def test_step_weight_is_variant_bridge(p):
    """阶梯权重积分结果与变体桥闭式一致"""
    f = from_weight(step_weight(p))
    closed = catalog("variant_bridge", p)
    np.testing.assert_allclose(f(T_PROBE), closed(T_PROBE), rtol=0, atol=1e-6)
    assert f.f_at_zero == pytest.approx(closed.f_at_zero, abs=1e-6)


def test_regularity_heuristic():
    assert is_regular_weight(zero_weight())
    assert is_regular_weight(wyd_weight(0.3))
    assert is_regular_weight(step_weight(0.9))
    assert not is_regular_weight(constant_weight(0.5))
    assert not is_regular_weight(step_weight(1.0))
    # h(λ) = 1/log(e/λ) 不可积但增长缓慢，启发式给出 regular；可显式覆盖
    slow = WeightFunction(name="slow", fn=lambda lam: 1.0 / (1.0 - np.log(np.maximum(lam, 1e-300))))
    f = from_weight(slow, regular=False)
    assert not f.regular


def test_weight_out_of_range():
    with pytest.raises(WeightOutOfRange):
        from_weight(WeightFunction(name="neg", fn=lambda lam: lam - 0.5))
    with pytest.raises(WeightOutOfRange):
        from_weight(lambda lam: 2.0 * np.ones_like(lam))


def test_plain_callable_weight():
    """普通可调用对象也可作为权重"""
    f = from_weight(lambda lam: np.full_like(lam, 0.5), name="half")
    assert f.name == "half"
    np.testing.assert_allclose(f(T_PROBE), np.sqrt(T_PROBE), rtol=0, atol=1e-6)


def test_failed_membership_raises():
    """积分给出非单调 f 时拒绝构造"""
    def decreasing_exponent(h, t, epsabs=None, limit=None):
        t = min(float(t), 1.0 / float(t))
        return 10.0 * (1.0 - t), 0.0

    with patch("backend.fcatalog.weights.canonical_exponent", side_effect=decreasing_exponent):
        with pytest.raises(NotInClass):
            from_weight(constant_weight(0.5), name="bad")
