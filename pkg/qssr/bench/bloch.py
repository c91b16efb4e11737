"""
Bloch vectors of qubit reductions and the asynchronicity measure.
"""

from typing import Sequence, Union
import numpy as np
from pydantic import BaseModel, ConfigDict
from qssr.errors import ArgumentError, UnsupportedMeasureError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState
from qssr.tensor_core import factor_layout, reduce_operator, reduce_outer

pauli_x = np.array([[0, 1],
                    [1, 0]], dtype=complex)

pauli_y = np.array([[0, -1j],
                    [1j, 0]], dtype=complex)

pauli_z = np.array([[1, 0],
                    [0, -1]], dtype=complex)

PAULIS = (pauli_x, pauli_y, pauli_z)


class BlochVector(BaseModel):
    """Expectation values (<X>, <Y>, <Z>) of a qubit state."""
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "BlochVector":
        x, y, z = (float(v) for v in values)
        return cls(x=x, y=y, z=z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def length(self) -> float:
        return float(np.linalg.norm(self.as_array()))


def _qubit_matrix(rho: Union[DensityMatrix, np.ndarray]) -> np.ndarray:
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    if matrix.shape != (2, 2):
        raise UnsupportedMeasureError(
            f"Bloch vectors are defined for qubits only, got a {matrix.shape[0]}-level state"
        )
    return matrix


def bloch(rho: Union[DensityMatrix, np.ndarray]) -> BlochVector:
    """(Tr(rho X), Tr(rho Y), Tr(rho Z)) of a qubit density matrix."""
    matrix = _qubit_matrix(rho)
    return BlochVector.from_array([np.real(np.trace(matrix @ sigma)) for sigma in PAULIS])


def reduced_qubit_states(state: Union[DensityMatrix, PureState, np.ndarray], shape: SystemShape) -> list[np.ndarray]:
    """Single-qubit reductions rho_1, ..., rho_n of a multi-qubit state."""
    if shape.local_dim != 2:
        raise UnsupportedMeasureError(f"asynchronicity needs qubit subsystems, got N = {shape.local_dim}")
    if isinstance(state, PureState):
        dims, offset = factor_layout(state.dim, shape)
        return [reduce_outer(state.amplitudes, state.amplitudes, dims, [offset + k]) for k in range(shape.n)]
    matrix = state.matrix if isinstance(state, DensityMatrix) else np.asarray(state)
    dims, offset = factor_layout(matrix.shape[0], shape)
    return [reduce_operator(matrix, dims, [offset + k]) for k in range(shape.n)]


def reduced_bloch_vectors(state: Union[DensityMatrix, PureState, np.ndarray], shape: SystemShape) -> list[BlochVector]:
    """Bloch vector of every single-qubit reduction of a multi-qubit state."""
    return [bloch(rho) for rho in reduced_qubit_states(state, shape)]


def mean_bloch_length(vectors: Sequence[BlochVector]) -> float:
    """mu_r, the average Bloch-vector length."""
    return float(np.mean([v.length for v in vectors]))


def asynchronicity(vectors: Sequence[BlochVector]) -> float:
    """
    Spread of n Bloch vectors after rescaling the longest one to unit length.

    The components are divided by r_max, then the per-axis variances around
    the mean are summed. All-zero input (every party maximally mixed) gives 0.
    """
    if len(vectors) < 2:
        raise ArgumentError(f"asynchronicity needs at least two Bloch vectors, got {len(vectors)}")
    components = np.array([v.as_array() for v in vectors])
    r_max = float(np.max(np.linalg.norm(components, axis=1)))
    if r_max == 0.0:
        return 0.0
    rescaled = components / r_max
    return float(np.sum(np.var(rescaled, axis=0)))
