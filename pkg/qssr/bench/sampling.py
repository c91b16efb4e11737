"""
Seeded random states and shot-noise estimates.

Every random draw comes from its own substream ``np.random.default_rng(keys)``
so results depend only on the keys, never on the order in which states are
processed.
"""

from typing import Sequence, Union
import numpy as np
from scipy.linalg import qr
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState
from qssr.tensor_core import kron_all
from qssr.bench.bloch import PAULIS, BlochVector, _qubit_matrix
from qssr.errors import ArgumentError

SeedLike = Union[int, Sequence[int], np.random.Generator]


def substream(*keys: int) -> np.random.Generator:
    """Independent generator identified by a tuple of non-negative integers."""
    return np.random.default_rng([int(k) for k in keys])


def as_generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, (int, np.integer)):
        return substream(seed)
    return substream(*seed)


def haar_unitary(dim: int, seed: SeedLike) -> np.ndarray:
    """Haar-random unitary: QR of a complex Ginibre matrix with the phases of diag(R) removed."""
    rng = as_generator(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def haar_state(dim: int, seed: SeedLike) -> PureState:
    """Haar-random pure state: a normalized complex Gaussian vector."""
    rng = as_generator(seed)
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState.normalized(vector)


def haar_product_state(shape: SystemShape, seed: SeedLike) -> PureState:
    """Tensor product of n independent Haar-random local states."""
    rng = as_generator(seed)
    factors = [haar_state(shape.local_dim, rng).amplitudes for _ in range(shape.n)]
    return PureState.normalized(kron_all(*factors))


def random_density_matrix(dim: int, seed: SeedLike, rank: int = None) -> DensityMatrix:
    """Random mixed state G G^dag / Tr(G G^dag) from a dim x rank Ginibre matrix."""
    rng = as_generator(seed)
    rank = dim if rank is None else rank
    if not 1 <= rank <= dim:
        raise ArgumentError(f"rank must lie in 1..{dim}, got {rank}")
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    rho = rho / np.real(np.trace(rho))
    return DensityMatrix((rho + rho.conj().T) / 2)


def shot_estimate_bloch(rho: Union[DensityMatrix, np.ndarray], shots: int, seed: Sequence[int]) -> BlochVector:
    """
    Bloch vector estimated from ``shots`` projective measurements per axis.

    The number of +1 outcomes on axis j is Binomial(shots, (1 + <sigma_j>)/2),
    drawn from substream (*seed, j); the estimate is 2k/shots - 1.
    """
    if shots < 1:
        raise ArgumentError(f"shots must be positive, got {shots}")
    matrix = _qubit_matrix(rho)
    keys = [seed] if isinstance(seed, (int, np.integer)) else list(seed)
    estimates = []
    for axis, sigma in enumerate(PAULIS):
        expectation = float(np.real(np.trace(matrix @ sigma)))
        p = min(max((1.0 + expectation) / 2.0, 0.0), 1.0)
        k = substream(*keys, axis).binomial(shots, p)
        estimates.append(2.0 * k / shots - 1.0)
    return BlochVector.from_array(estimates)
