"""
测试输入生成 — 随机态、经典-量子态、Haar 酉、Stinespring 随机信道
"""

from .channels import (Channel, apply_channel_on_2, depolarizing_channel, identity_channel,
                       random_channel)
from .generators import (apply_local_unitary, bell_state, classical_quantum, haar_unitary,
                         product_state, random_bipartite, random_density, random_pure,
                         random_unitary)
