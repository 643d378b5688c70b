"""
生成示例状态文件

写出 data/states/ 下的一组两体态与可观测量，供 CLI 演示与手工核对
（仓库只附 bell / mixed / sigma_z，其余由本脚本生成）：
    bell.json       (|00⟩ + |11⟩)/√2
    cq.json         0.3|0⟩⟨0|⊗ρ₀ + 0.7|1⟩⟨1|⊗ρ₁
    product.json    ρ₁ ⊗ ρ₂
    random.json     满秩随机两比特态
    pure.json       随机纯态
    mixed.json      I/4
    sigma_z.json    子系统 1 上的 σz

用法：
    python scripts/build_example_states.py [--out data/states] [--seed 0]
"""

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from backend.matcore import BipartiteState
from backend.statesgen import (bell_state, classical_quantum, product_state, random_bipartite,
                               random_density)
from frontend.state_io import write_observable, write_state

logger = logging.getLogger("masi.scripts")


def build_states(seed: int) -> dict[str, BipartiteState]:
    return {
        "bell": bell_state(),
        "cq": classical_quantum([0.3, 0.7], seed=seed, label="cq"),
        "product": product_state(random_density(2, seed=seed + 1), random_density(2, seed=seed + 2),
                                 label="product"),
        "random": random_bipartite(2, 2, seed=seed + 3, label="random"),
        "pure": random_bipartite(2, 2, rank=1, seed=seed + 4, label="pure"),
        "mixed": BipartiteState.from_array(np.eye(4) / 4, 2, 2, label="mixed"),
    }


def main():
    parser = argparse.ArgumentParser(description="生成示例状态文件")
    parser.add_argument("--out", type=str, default=str(Path(__file__).resolve().parent.parent / "data" / "states"))
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    out = Path(args.out)

    for name, state in build_states(args.seed).items():
        write_state(state, out / f"{name}.json")
        logger.info("[scripts] %s → %s", name, out / f"{name}.json")
    write_observable(np.diag([1.0, -1.0]), out / "sigma_z.json", label="sigma_z", dims=(2,))
    logger.info("[scripts] 共写出 %d 个文件", len(build_states(args.seed)) + 1)


if __name__ == "__main__":
    main()
