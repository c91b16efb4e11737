"""
Generalized two-party exchange operators.

A representation is fixed by a global phase delta and an antisymmetric phase
matrix phi (phi_ij = -phi_ji, phi_ii = 0):

    <ij| P |ji> = exp(i (delta + phi_ij)),    P |ii> = exp(i delta) |ii>.

P^2 = exp(2 i delta) I, and its eigenvalues are +/- exp(i delta).
"""

from itertools import combinations, combinations_with_replacement
import numpy as np
from qssr.config import DEFAULT_TOLERANCES
from qssr.errors import ArgumentError
from qssr.utils.numpy import max_abs_deviation


class SwapRepresentation:
    """
    Exchange operator on two qudits with anyonic phases.

    Attributes:
        delta: Global phase in radians.
        phases: Read-only antisymmetric N x N matrix of relative phases in radians.
    """

    def __init__(self, delta: float, phases: np.ndarray):
        phases = np.array(phases, dtype=float)
        if phases.ndim != 2 or phases.shape[0] != phases.shape[1] or phases.shape[0] < 2:
            raise ArgumentError(f"phase matrix must be square with N >= 2, got shape {phases.shape}")
        deviation = max_abs_deviation(phases, -phases.T)
        if deviation > DEFAULT_TOLERANCES.exact:
            raise ArgumentError(f"phase matrix must be antisymmetric (max |phi + phi^T| = {deviation:.3e})")
        phases.setflags(write=False)
        self.delta = float(delta)
        self.phases = phases

    @classmethod
    def standard(cls, N: int) -> "SwapRepresentation":
        return cls(0.0, np.zeros((N, N)))

    @classmethod
    def from_phi01(cls, phi01: float, delta: float = 0.0, N: int = 2) -> "SwapRepresentation":
        """Representation whose only nonzero relative phase is phi_01 = -phi_10."""
        phases = np.zeros((N, N))
        phases[0, 1], phases[1, 0] = phi01, -phi01
        return cls(delta, phases)

    @property
    def local_dim(self) -> int:
        return self.phases.shape[0]

    @property
    def is_standard(self) -> bool:
        return self.delta == 0.0 and not np.any(self.phases)

    def operator(self) -> np.ndarray:
        N = self.local_dim
        p = np.zeros((N * N, N * N), dtype=complex)
        for i in range(N):
            for j in range(N):
                p[i * N + j, j * N + i] = np.exp(1j * (self.delta + self.phases[i, j]))
        return p

    def _pair_vector(self, i: int, j: int, sign: int) -> np.ndarray:
        N = self.local_dim
        vector = np.zeros(N * N, dtype=complex)
        if i == j:
            vector[i * N + i] = 1.0
            return vector
        vector[i * N + j] = 1.0 / np.sqrt(2)
        vector[j * N + i] = sign * np.exp(-1j * self.phases[i, j]) / np.sqrt(2)
        return vector

    def eigenspace_basis(self, sign: int) -> list[np.ndarray]:
        """
        Orthonormal basis of the eigenspace with eigenvalue sign * exp(i delta).

        Vectors are ordered like the sorted (sign +1) or strictly increasing
        (sign -1) level pairs.
        """
        if sign not in (1, -1):
            raise ArgumentError(f"sign must be +1 or -1, got {sign}")
        levels = range(self.local_dim)
        pairs = combinations_with_replacement(levels, 2) if sign == 1 else combinations(levels, 2)
        return [self._pair_vector(i, j, sign) for i, j in pairs]

    def eigenspace_dim(self, sign: int) -> int:
        N = self.local_dim
        return N * (N + 1) // 2 if sign == 1 else N * (N - 1) // 2

    def __repr__(self) -> str:
        return f"SwapRepresentation(delta={self.delta:.4g}, N={self.local_dim})"

    def to_dict(self) -> dict:
        return {"delta": self.delta, "phases": self.phases.tolist()}
