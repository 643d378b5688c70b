"""
测试 F_op 内置目录 — 取值、别名、参数校验、成员资格抽样、t≈1 级数分支
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from backend.errors import ParameterOutOfRange, UnknownName
from backend.fcatalog import available_names, catalog, check_membership, parse_function_spec

REGULAR_NAMES = [("sld", None), ("wy", None), ("wyd", 0.3), ("variant_bridge", 0.5),
                 ("bridge", 0.0)]
ALL_ENTRIES = REGULAR_NAMES + [("kubo_mori", None), ("harmonic", None), ("geometric", None),
                               ("bridge", 0.7), ("variant_bridge", 1.0), ("wyd_mean", 0.25)]


def test_catalog_values():
    """目录函数的代表值"""
    assert catalog("sld")(3.0) == pytest.approx(2.0, abs=1e-15)
    assert catalog("harmonic")(1.0) == 1.0
    assert catalog("wy")(4.0) == pytest.approx(2.25, abs=1e-12)
    assert catalog("wyd", 0.5)(4.0) == pytest.approx(2.25, abs=1e-12)
    assert catalog("geometric")(9.0) == pytest.approx(3.0, abs=1e-15)
    assert catalog("kubo_mori")(np.e) == pytest.approx(np.e - 1.0, abs=1e-14)


def test_catalog_f_at_zero():
    assert catalog("sld").f_at_zero == 0.5
    assert catalog("wy").f_at_zero == 0.25
    assert catalog("wyd", 0.3).f_at_zero == pytest.approx(0.21)
    assert catalog("bridge", 0.0).regular
    assert not catalog("bridge", 0.4).regular
    assert catalog("variant_bridge", 0.5).f_at_zero == pytest.approx(0.5 * (4 * 0.5 / 2.25) ** 0.5)
    for name in ("kubo_mori", "harmonic", "geometric"):
        assert not catalog(name).regular


def test_aliases():
    """别名与原名取值一致"""
    grid = np.array([0.1, 0.5, 2.0, 10.0])
    np.testing.assert_array_equal(catalog("arithmetic")(grid), catalog("sld")(grid))
    np.testing.assert_array_equal(catalog("f_max")(grid), catalog("sld")(grid))
    np.testing.assert_array_equal(catalog("f_min")(grid), catalog("harmonic")(grid))
    np.testing.assert_array_equal(catalog("logarithmic")(grid), catalog("kubo_mori")(grid))
    assert "wyd" in available_names()


@pytest.mark.parametrize("name,param", ALL_ENTRIES)
def test_catalog_membership(name, param):
    """归一化 1e-14、对称 1e-10、网格单调"""
    f = catalog(name, param)
    report = check_membership(f)
    assert report.normalization_residual <= 1e-14
    assert report.symmetry_residual < 1e-10
    assert report.monotone, report.witness


@pytest.mark.parametrize("name,param", [("kubo_mori", None), ("wyd", 0.3), ("wyd", 0.5)])
def test_series_branch_continuity(name, param):
    """t≈1 级数分支与直接公式衔接"""
    f = catalog(name, param)
    if name == "kubo_mori":
        direct = lambda t: (t - 1.0) / np.log(t)
    else:
        p = param
        direct = lambda t: p * (1 - p) * (t - 1) ** 2 / ((t ** p - 1) * (t ** (1 - p) - 1))
    for t in (1.0 - 3e-4, 1.0 + 3e-4, 1.0 + 2e-3):
        assert f(t) == pytest.approx(direct(t), rel=1e-9)
    # 分支内部仍然平滑
    near = f(np.array([1.0 - 5e-5, 1.0, 1.0 + 5e-5]))
    assert near[1] == 1.0
    assert np.all(np.diff(near) > 0)


def test_catalog_errors():
    with pytest.raises(UnknownName):
        catalog("renyi")
    with pytest.raises(ParameterOutOfRange):
        catalog("wyd")
    with pytest.raises(ParameterOutOfRange):
        catalog("wyd", 1.0)
    with pytest.raises(ParameterOutOfRange):
        catalog("bridge", 1.5)
    with pytest.raises(ParameterOutOfRange):
        catalog("variant_bridge", -0.1)
    with pytest.raises(ParameterOutOfRange):
        catalog("sld", 0.5)


def test_parse_function_spec():
    assert parse_function_spec("wy").name == "wy"
    assert parse_function_spec("wyd:0.3").f_at_zero == pytest.approx(0.21)
    assert parse_function_spec("bridge(0.5)").name == "bridge(0.5)"
    assert parse_function_spec(" f_min ").name == "harmonic"
    with pytest.raises(UnknownName):
        parse_function_spec("wy::3")
    with pytest.raises(UnknownName):
        parse_function_spec("nope:0.1")


@hyp_settings(max_examples=25, deadline=None)
@given(p=st.floats(min_value=0.01, max_value=0.99))
def test_wyd_family_membership(p):
    """WYD 族对任意 p 都通过抽样检验"""
    report = check_membership(catalog("wyd", p))
    assert report.passed(norm_tol=1e-14, sym_tol=1e-10)


@hyp_settings(max_examples=25, deadline=None)
@given(alpha=st.floats(min_value=0.0, max_value=1.0))
def test_bridge_family_between_extremes(alpha):
    """f_min ≤ f_α ≤ f_max 逐点成立"""
    grid = np.logspace(-3, 3, 31)
    values = catalog("bridge", alpha)(grid)
    assert np.all(values <= catalog("f_max")(grid) * (1 + 1e-12))
    assert np.all(values >= catalog("f_min")(grid) * (1 - 1e-12))
