"""
测试命令行 — CSV 输出、退出码、确定性、gen 子命令
"""

import io
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

import numpy as np
import pandas as pd
import pytest

from backend.infomeasures import variance
from backend.matcore import embed_local
from backend.statesgen import (bell_state, classical_quantum, product_state, random_bipartite,
                               random_density)
from frontend.cli import EXIT_INVALID, EXIT_NOT_REGULAR, EXIT_OK, EXIT_SPECTRUM, main
from frontend.state_io import read_state, write_observable, write_state

SZ = np.diag([1.0, -1.0])


@pytest.fixture
def files(tmp_path):
    paths = {
        "bell": tmp_path / "bell.json",
        "cq": tmp_path / "cq.json",
        "mixed": tmp_path / "mixed.json",
        "pure": tmp_path / "pure.json",
        "sz_local": tmp_path / "sz.json",
        "sz_full": tmp_path / "sz_full.json",
    }
    write_state(bell_state(), paths["bell"])
    write_state(classical_quantum([0.3, 0.7], seed=1), paths["cq"], label="cq")
    write_state(product_state(np.eye(2) / 2, random_density(2, seed=2)), paths["mixed"], label="mixed")
    write_state(random_bipartite(2, 2, rank=1, seed=3), paths["pure"], label="pure")
    write_observable(SZ, paths["sz_local"], label="sz")
    write_observable(embed_local(SZ, 2), paths["sz_full"], label="sz1")
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv) -> tuple[int, pd.DataFrame | None, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    table = pd.read_csv(io.StringIO(captured.out)) if captured.out.strip() else None
    return code, table, captured.err


# ============================================================
# skew
# ============================================================

def test_skew_commuting_is_zero(capsys, files):
    code, table, _ = run(capsys, "skew", files["mixed"], "--f", "wy", "--observable", files["sz_full"])
    assert code == EXIT_OK
    assert list(table.columns) == ["label", "f", "value", "residual"]
    assert table.loc[0, "label"] == "mixed"
    assert abs(table.loc[0, "value"]) < 1e-12


def test_skew_pure_equals_variance(capsys, files):
    s = read_state(files["pure"])
    expected = variance(s.state, embed_local(SZ, 2))
    for f in ("wy", "sld", "wyd:0.3", "variant_bridge(0.5)"):
        code, table, _ = run(capsys, "skew", files["pure"], "--f", f, "--observable", files["sz_local"])
        assert code == EXIT_OK
        assert table.loc[0, "value"] == pytest.approx(expected, abs=1e-10)
        assert table.loc[0, "residual"] < 1e-8


def test_skew_malformed_json(capsys, tmp_path, files):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"dims\": [2, 2], ", encoding="utf-8")
    code, table, err = run(capsys, "skew", str(bad), "--observable", files["sz_local"])
    assert code == EXIT_INVALID
    assert table is None
    assert "JSON" in err


def test_skew_non_regular(capsys, files):
    code, _, _ = run(capsys, "skew", files["bell"], "--f", "kubo_mori", "--observable", files["sz_local"])
    assert code == EXIT_NOT_REGULAR


def test_missing_file_and_unknown_function(capsys, tmp_path, files):
    code, _, _ = run(capsys, "skew", str(tmp_path / "none.json"), "--observable", files["sz_local"])
    assert code == EXIT_INVALID
    code, _, _ = run(capsys, "skew", files["bell"], "--f", "nope", "--observable", files["sz_local"])
    assert code == EXIT_INVALID


def test_argparse_error(capsys, files):
    code, _, _ = run(capsys, "skew", files["bell"])
    assert code == 2


# ============================================================
# lqu / ip
# ============================================================

def test_lqu_bell(capsys, files):
    code, table, _ = run(capsys, "lqu", files["bell"], "--f", "wy", "--spectrum", "1,-1", "--starts", "4")
    assert code == EXIT_OK
    assert list(table.columns) == ["label", "f", "value", "converged", "spread"]
    assert table.loc[0, "label"] == "bell"
    assert table.loc[0, "value"] == pytest.approx(1.0, abs=1e-6)


def test_ip_bell(capsys, files):
    code, table, _ = run(capsys, "ip", files["bell"], "--spectrum", "1,-1", "--starts", "4")
    assert code == EXIT_OK
    assert table.loc[0, "f"] == "sld"
    assert table.loc[0, "value"] == pytest.approx(1.0, abs=1e-6)


def test_lqu_cq(capsys, files):
    code, table, _ = run(capsys, "lqu", files["cq"], "--spectrum", "1,-1", "--starts", "4")
    assert code == EXIT_OK
    assert table.loc[0, "value"] < 1e-8


def test_lqu_exit_codes(capsys, files):
    code, _, _ = run(capsys, "lqu", files["bell"], "--f", "kubo_mori", "--starts", "2")
    assert code == EXIT_NOT_REGULAR
    code, _, err = run(capsys, "lqu", files["bell"], "--spectrum", "1,2,3", "--starts", "2")
    assert code == EXIT_SPECTRUM
    assert "d1" in err
    code, _, _ = run(capsys, "lqu", files["bell"], "--spectrum", "a,b", "--starts", "2")
    assert code == EXIT_INVALID
    code, _, _ = run(capsys, "lqu", files["bell"], "--starts", "0")
    assert code == EXIT_INVALID


def test_lqu_byte_identical(capsys, files):
    """同一种子两次运行 CSV 逐字节相同"""
    argv = ["lqu", files["pure"], "--f", "wyd(0.3)", "--starts", "3", "--seed", "17"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second
    assert first.startswith("label,f,value,converged,spread\n")


def test_lqu_workers_same_output(capsys, files):
    main(["lqu", files["pure"], "--starts", "4", "--workers", "1"])
    serial = capsys.readouterr().out
    main(["lqu", files["pure"], "--starts", "4", "--workers", "2"])
    assert capsys.readouterr().out == serial


# ============================================================
# sweep
# ============================================================

def test_sweep_pure_constant(capsys, files):
    code, table, _ = run(capsys, "sweep", files["pure"], "--family", "wyd", "--grid", "3",
                         "--spectrum", "1,-1", "--starts", "4")
    assert code == EXIT_OK
    assert list(table.columns) == ["label", "family", "param", "f", "value", "converged", "spread"]
    assert len(table) == 3
    assert list(table["param"]) == pytest.approx([0.25, 0.5, 0.75])
    assert table["value"].max() - table["value"].min() < 1e-6


def test_sweep_cq_zero(capsys, files):
    code, table, _ = run(capsys, "sweep", files["cq"], "--family", "variant_bridge", "--grid", "3",
                         "--lo", "0", "--hi", "0.9", "--starts", "4")
    assert code == EXIT_OK
    assert (table["value"] < 1e-8).all()
    assert table["param"].is_monotonic_increasing


def test_sweep_variant_bridge_default_grid(capsys, files):
    code, table, _ = run(capsys, "sweep", files["bell"], "--family", "variant_bridge", "--grid", "4",
                         "--spectrum", "1,-1", "--starts", "4")
    assert code == EXIT_OK
    assert list(table["param"]) == pytest.approx([0.2, 0.4, 0.6, 0.8])


@pytest.mark.parametrize("extra", [["--family", "variant_bridge", "--lo", "0", "--hi", "1"],
                                   ["--family", "bridge"]])
def test_sweep_non_regular_member(capsys, files, extra):
    code, table, _ = run(capsys, "sweep", files["bell"], "--grid", "4", *extra)
    assert code == EXIT_NOT_REGULAR
    assert table is None


def test_sweep_bad_grid(capsys, files):
    code, _, _ = run(capsys, "sweep", files["bell"], "--family", "wyd", "--grid", "1")
    assert code == EXIT_INVALID


# ============================================================
# gen
# ============================================================

@pytest.mark.parametrize("kind", ["bell", "cq", "product", "random", "pure"])
def test_gen_writes_valid_state(capsys, tmp_path, kind):
    out = tmp_path / f"{kind}.json"
    code = main(["gen", "--kind", kind, "--d1", "2", "--d2", "3" if kind != "bell" else "2",
                 "--seed", "5", "--out", str(out)])
    assert code == EXIT_OK
    s = read_state(out)
    assert s.label == f"{kind}-5"
    assert s.d1 == 2
    if kind == "pure":
        assert s.state.is_pure()


def test_gen_stdout_deterministic(capsys):
    main(["gen", "--kind", "random", "--rank", "2", "--seed", "9", "--label", "r"])
    first = capsys.readouterr().out
    main(["gen", "--kind", "random", "--rank", "2", "--seed", "9", "--label", "r"])
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert data["label"] == "r"
    assert data["dims"] == [2, 2]


def test_gen_bad_rank(capsys):
    assert main(["gen", "--kind", "random", "--rank", "7"]) == EXIT_INVALID
