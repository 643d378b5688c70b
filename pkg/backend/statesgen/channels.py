"""
CPTP 信道的 Kraus 表示，作用于两体态的子系统 2
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from backend.errors import DimensionMismatch, InvalidChannel
from backend.matcore import BipartiteState, tensor

from .generators import random_unitary

_TP_TOL = 1e-10


@dataclass(frozen=True)
class Channel:
    """Σ K_i† K_i = I 的 Kraus 算子组，K_i 形状 (d_out, d_in)"""

    kraus_ops: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(np.array(k, dtype=np.complex128) for k in self.kraus_ops)
        if not ops:
            raise InvalidChannel("Kraus 算子组为空")
        shape = ops[0].shape
        if len(shape) != 2 or any(k.shape != shape for k in ops):
            raise DimensionMismatch(f"Kraus 算子形状不一致: {[k.shape for k in ops]}")
        total = sum(k.conj().T @ k for k in ops)
        residual = float(np.max(np.abs(total - np.eye(shape[1]))))
        if residual > _TP_TOL:
            raise InvalidChannel(f"不保迹: |Σ K†K - I| = {residual:.3e}")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def d_in(self) -> int:
        return self.kraus_ops[0].shape[1]

    @property
    def d_out(self) -> int:
        return self.kraus_ops[0].shape[0]


def random_channel(d: int, kraus_count: int, seed: int = 0) -> Channel:
    """
    Stinespring 构造：Haar 酉 U (d·k 维) 的前 d 列为等距嵌入 V，
    按行切成 k 个 d×d 块即 Kraus 算子
    """
    if kraus_count < 1:
        raise DimensionMismatch(f"kraus_count 必须 ≥ 1: {kraus_count}")
    v = random_unitary(d * kraus_count, seed)[:, :d]
    return Channel(kraus_ops=tuple(v[i * d:(i + 1) * d, :] for i in range(kraus_count)))


def identity_channel(d: int) -> Channel:
    return Channel(kraus_ops=(np.eye(d),))


def depolarizing_channel(d: int) -> Channel:
    """完全退极化 ρ ↦ Tr(ρ)·I/d，Kraus 算子 |i⟩⟨j|/√d"""
    ops = []
    for i in range(d):
        for j in range(d):
            k = np.zeros((d, d))
            k[i, j] = 1.0 / np.sqrt(d)
            ops.append(k)
    return Channel(kraus_ops=tuple(ops))


def apply_channel_on_2(s: BipartiteState, ch: Channel) -> BipartiteState:
    """(1₁ ⊗ Φ₂) ρ₁₂"""
    if ch.d_in != s.d2:
        raise DimensionMismatch(f"信道输入维度 {ch.d_in} 与 d2={s.d2} 不符")
    eye = np.eye(s.d1)
    out = np.zeros((s.d1 * ch.d_out, s.d1 * ch.d_out), dtype=np.complex128)
    for k in ch.kraus_ops:
        lifted = tensor(eye, k)
        out += lifted @ s.matrix @ lifted.conj().T
    # Σ K†K 与 I 的偏差 ≤ _TP_TOL 时迹可偏离 1 达同一量级
    out /= np.trace(out).real
    return BipartiteState.from_array(out, s.d1, ch.d_out, label=s.label)
