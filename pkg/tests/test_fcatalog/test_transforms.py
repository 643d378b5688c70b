"""
测试 f̃ / f̌ 变换
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np
import pytest

from backend.errors import NotRegular
from backend.fcatalog import catalog, check_membership, f_check, f_tilde

GRID = np.array([0.1, 0.5, 1.0, 2.0, 10.0])
REGULAR = [catalog("sld"), catalog("wy"), catalog("wyd", 0.3), catalog("wyd", 0.25),
           catalog("variant_bridge", 0.5)]


def test_transform_table():
    """f̃ 的三行对照：SLD → 调和，WY → 几何，WYD(β) → (x^β + x^{1-β})/2"""
    np.testing.assert_allclose(f_tilde(catalog("sld"))(GRID), 2 * GRID / (GRID + 1),
                               rtol=0, atol=1e-10)
    np.testing.assert_allclose(f_tilde(catalog("wy"))(GRID), np.sqrt(GRID), rtol=0, atol=1e-10)
    for beta in (0.25, 0.5):
        expected = (GRID ** beta + GRID ** (1 - beta)) / 2
        np.testing.assert_allclose(f_tilde(catalog("wyd", beta))(GRID), expected,
                                   rtol=0, atol=1e-10)
        np.testing.assert_allclose(catalog("wyd_mean", beta)(GRID), expected,
                                   rtol=0, atol=1e-12)


@pytest.mark.parametrize("f", REGULAR, ids=lambda f: f.name)
def test_tilde_is_non_regular(f):
    """f̃ 在 F_op 中且 f̃(t) → 0 单调"""
    g = f_tilde(f)
    assert g.f_at_zero == 0.0
    assert not g.regular
    assert g(1.0) == pytest.approx(1.0, abs=1e-15)
    tail = g(np.array([1e-2, 1e-4, 1e-6]))
    assert np.all(np.diff(tail) < 0)
    assert tail[-1] < 0.05
    assert check_membership(g).passed(norm_tol=1e-14, sym_tol=1e-10)


def test_tilde_deterministic_and_injective():
    """同一 f 两次变换逐位相同；不同 regular 函数的 f̃ 不同"""
    probe = np.logspace(-2, 2, 9)
    for f in REGULAR:
        np.testing.assert_array_equal(f_tilde(f)(probe), f_tilde(f)(probe))
    tildes = [f_tilde(f)(probe) for f in REGULAR]
    for i in range(len(tildes)):
        for j in range(i + 1, len(tildes)):
            assert np.max(np.abs(tildes[i] - tildes[j])) > 1e-6


def test_check_transform():
    sld_check = f_check(catalog("sld"))
    np.testing.assert_allclose(sld_check(GRID), 1 / (1 + GRID), rtol=1e-15)
    assert sld_check(1.0) == pytest.approx(0.5)
    assert f_check(catalog("wy"))(0.0) == 1.0

    f = catalog("wyd", 0.3)
    probe = np.logspace(-3, 3, 13)
    np.testing.assert_allclose(f_check(f)(probe) * f(probe), f.f_at_zero, rtol=1e-14)
    assert np.all(np.diff(f_check(f)(probe)) < 0)


def test_transforms_require_regular():
    for name in ("kubo_mori", "harmonic", "geometric"):
        with pytest.raises(NotRegular):
            f_tilde(catalog(name))
        with pytest.raises(NotRegular):
            f_check(catalog(name))
