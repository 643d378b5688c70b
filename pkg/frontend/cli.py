"""
命令行入口

    masi skew   STATE --f wy --observable OBS
    masi lqu    STATE --f wy --spectrum 1,-1 --starts 32 --seed 0
    masi ip     STATE --spectrum 1,-1
    masi sweep  STATE --family wyd --grid 5
    masi gen    --kind bell --out data/states/bell.json

stdout 只输出 CSV（带表头），诊断信息写 stderr。
退出码：0 成功；2 解析/校验错误；3 non-regular 函数；4 谱长度与 d1 不符
"""

import argparse
import logging
import sys

import numpy as np
import pandas as pd

from backend.config import settings
from backend.errors import GeometryError, NotRegular
from backend.fcatalog import SpectrumLambda, parse_function_spec
from backend.infomeasures import skew_information
from backend.lqu import SWEEP_FAMILIES, LquResult, OptimizerConfig, f_lqu, sweep
from backend.matcore import BipartiteState, Observable, embed_local
from backend.statesgen import (bell_state, classical_quantum, product_state, random_bipartite,
                               random_density)

from .state_io import read_observable, read_state, write_state

logger = logging.getLogger("masi.cli")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_REGULAR = 3
EXIT_SPECTRUM = 4

GEN_KINDS = ("bell", "cq", "product", "random", "pure")


class SpectrumLengthError(GeometryError):
    """--spectrum 长度与 d1 不符"""


def _configure_logging(level: str | None) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=(level or settings.log_level).upper(),
        format=settings.log_format,
        force=True,
    )


def _parse_spectrum(raw: str | None, d1: int) -> SpectrumLambda | None:
    if raw is None:
        return None
    try:
        values = [float(x) for x in raw.split(",") if x.strip()]
    except ValueError as exc:
        raise GeometryError(f"--spectrum 无法解析: {raw!r}") from exc
    if len(values) != d1:
        raise SpectrumLengthError(f"--spectrum 长度 {len(values)} 与 d1 = {d1} 不符")
    return SpectrumLambda.of(values)


def _optimizer_config(args) -> OptimizerConfig:
    overrides = {"seed": args.seed}
    if args.starts is not None:
        overrides["n_starts"] = args.starts
    if args.workers is not None:
        overrides["workers"] = args.workers
    return OptimizerConfig(**overrides)


def _label(s: BipartiteState, path: str) -> str:
    return s.label or path


def _emit(rows: list[dict]) -> None:
    pd.DataFrame(rows).to_csv(sys.stdout, index=False, lineterminator="\n")


def _lqu_row(label: str, result: LquResult) -> dict:
    return {
        "label": label,
        "f": result.function_name,
        "value": result.value,
        "converged": result.converged,
        "spread": result.spread,
    }


# ============================================================
# 子命令
# ============================================================

def cmd_skew(args) -> int:
    s = read_state(args.state)
    f = parse_function_spec(args.f)
    a = read_observable(args.observable)
    if a.dim == s.d1 and a.dim != s.state.dim:
        a = Observable.from_array(embed_local(a, s.d2))
    report = skew_information(f, s.state, a)
    _emit([{"label": _label(s, args.state), "f": f.name,
            "value": report.value, "residual": report.cross_residual}])
    return EXIT_OK


def cmd_lqu(args) -> int:
    s = read_state(args.state)
    f = parse_function_spec(args.f)
    lam = _parse_spectrum(args.spectrum, s.d1)
    result = f_lqu(f, s, lam, _optimizer_config(args))
    if not result.converged:
        logger.warning("[cli] 多起点结果未收敛: spread=%.3e", result.spread)
    _emit([_lqu_row(_label(s, args.state), result)])
    return EXIT_OK


def cmd_sweep(args) -> int:
    s = read_state(args.state)
    lam = _parse_spectrum(args.spectrum, s.d1)
    label = _label(s, args.state)
    rows = []
    results = sweep(args.family, args.grid, s, lam, _optimizer_config(args), lo=args.lo, hi=args.hi)
    for param, result in results:
        row = {"label": label, "family": args.family, "param": param}
        row.update(_lqu_row(label, result))
        rows.append(row)
    _emit(rows)
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.kind == "bell":
        s = bell_state()
    elif args.kind == "cq":
        probs = rng.dirichlet(np.ones(args.d1))
        probs = probs / probs.sum()
        s = classical_quantum(probs, seed=int(rng.integers(0, 2 ** 63)), d2=args.d2)
    elif args.kind == "product":
        seeds = rng.integers(0, 2 ** 63, size=2)
        s = product_state(random_density(args.d1, seed=int(seeds[0])),
                          random_density(args.d2, seed=int(seeds[1])))
    elif args.kind == "pure":
        s = random_bipartite(args.d1, args.d2, rank=1, seed=args.seed)
    else:
        s = random_bipartite(args.d1, args.d2, rank=args.rank, seed=args.seed)
    label = args.label or f"{args.kind}-{args.seed}"
    write_state(s, args.out or sys.stdout, label=label)
    if args.out:
        logger.info("[cli] 已写出 %s → %s", label, args.out)
    return EXIT_OK


# ============================================================
# 参数解析
# ============================================================

def _add_optimizer_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spectrum", type=str, default=None, help="谱 Λ，逗号分隔，长度须等于 d1")
    p.add_argument("--starts", type=int, default=None, help="起点数，默认取 settings")
    p.add_argument("--seed", type=int, default=0, help="随机种子（64 位）")
    p.add_argument("--workers", type=int, default=None, help="并行起点线程数")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="masi", description="度量调整斜信息与 f-LQU 计算")
    parser.add_argument("--log-level", type=str, default=None, help="日志级别（写 stderr）")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("skew", help="计算 I^f_ρ(A) 及两条路径残差")
    p.add_argument("state", help="状态文件")
    p.add_argument("--f", type=str, default="wy", help="函数，name 或 name:param")
    p.add_argument("--observable", type=str, required=True, help="可观测量文件（全空间或子系统 1）")
    p.set_defaults(handler=cmd_skew)

    p = sub.add_parser("lqu", help="计算 f-LQU")
    p.add_argument("state", help="状态文件")
    p.add_argument("--f", type=str, default="wy", help="函数，name 或 name:param")
    _add_optimizer_args(p)
    p.set_defaults(handler=cmd_lqu)

    p = sub.add_parser("ip", help="干涉功率，等价于 lqu --f sld")
    p.add_argument("state", help="状态文件")
    _add_optimizer_args(p)
    p.set_defaults(handler=cmd_lqu, f="sld")

    p = sub.add_parser("sweep", help="沿函数族参数扫描 f-LQU")
    p.add_argument("state", help="状态文件")
    p.add_argument("--family", choices=SWEEP_FAMILIES, required=True)
    p.add_argument("--grid", type=int, default=5, help="参数点数 k ≥ 2")
    p.add_argument("--lo", type=float, default=None, help="参数下限，与 --hi 一起改为等分网格")
    p.add_argument("--hi", type=float, default=None, help="参数上限")
    _add_optimizer_args(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("gen", help="生成测试态文件")
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--d1", type=int, default=2)
    p.add_argument("--d2", type=int, default=2)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--label", type=str, default=None)
    p.add_argument("--out", type=str, default=None, help="输出路径，缺省写 stdout")
    p.set_defaults(handler=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        _configure_logging(args.log_level)
        return args.handler(args)
    except NotRegular as exc:
        logger.error("[cli] %s", exc)
        return EXIT_NOT_REGULAR
    except SpectrumLengthError as exc:
        logger.error("[cli] %s", exc)
        return EXIT_SPECTRUM
    except (ValueError, OSError) as exc:
        logger.error("[cli] %s", exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
