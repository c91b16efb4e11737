"""
Named two-qubit synchronizers and the seed unitaries that produce them.
"""

from typing import Callable, Dict
import numpy as np
from qssr.builder.build import build, build_mixed_representation
from qssr.builder.modes import SymmetryMode
from qssr.builder.swap import SwapRepresentation
from qssr.channel import KrausChannel
from qssr.shape import SystemShape

_r = 1 / np.sqrt(2)

# rows: |0;00>, |0;S01>, |0;11>, |1;00>, |1;S01>, |1;11>
TWO_QUBIT_SEED = np.array([
    [1, 0, 0, 0, 0, 0],
    [0, _r, _r, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, _r, -_r, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
], dtype=complex)

# rows: |0;00>, |0;S01>, |0;11>, |1;A01>
TRIPLET_SINGLET_SEED = np.array([
    [1, 0, 0, 0],
    [0, _r, _r, 0],
    [0, 0, 0, 1],
    [0, _r, -_r, 0],
], dtype=complex)

TWO_QUBIT = SystemShape.of(2, 2, 2)


def two_qubit_synchronizer() -> KrausChannel:
    """
    K_1 = [[1, 0, 0, 0], [0, 1/2, 1/2, 0], [0, 1/2, 1/2, 0], [0, 0, 0, 1]],
    K_2 = [[0, 0, 0, 0], [0, 1/2, -1/2, 0], [0, 1/2, -1/2, 0], [0, 0, 0, 0]].
    """
    channel = build(TWO_QUBIT, SymmetryMode.symmetric(), TWO_QUBIT_SEED)
    channel.metadata.update({"preset": "two-qubit", "seed_unitary": "two-qubit"})
    return channel


def sign_flipped_synchronizer() -> KrausChannel:
    """The two-qubit synchronizer with the third row of K_2 negated; K_2 then has antisymmetric columns."""
    base = two_qubit_synchronizer()
    k1, k2 = base.operators
    k2 = k2.copy()
    k2[2, :] *= -1
    return KrausChannel(TWO_QUBIT, [k1, k2], metadata={"preset": "sign-flipped"})


def triplet_singlet_channel() -> KrausChannel:
    """Projectors onto the triplet and the singlet, in that order."""
    channel = build(TWO_QUBIT, SymmetryMode.mixed(1, 1), TRIPLET_SINGLET_SEED)
    channel.metadata.update({"preset": "triplet-singlet", "seed_unitary": "triplet-singlet"})
    return channel


def twisted_exchange_channel() -> KrausChannel:
    """
    K_1 = triplet projector, K_2 = 1/2 [[0, 0, 0, 0], [0, 1, -1, 0], [0, -i, i, 0], [0, 0, 0, 0]]:
    the second operator uses the exchange with phi_01 = pi/2.
    """
    reps = [SwapRepresentation.standard(2), SwapRepresentation.from_phi01(np.pi / 2)]
    channel = build_mixed_representation(TWO_QUBIT, reps, [1, 1], TWO_QUBIT_SEED)
    channel.metadata.update({"preset": "twisted-exchange", "seed_unitary": "two-qubit"})
    return channel


PRESETS: Dict[str, Callable[[], KrausChannel]] = {
    "two-qubit": two_qubit_synchronizer,
    "sign-flipped": sign_flipped_synchronizer,
    "triplet-singlet": triplet_singlet_channel,
    "twisted-exchange": twisted_exchange_channel,
}
