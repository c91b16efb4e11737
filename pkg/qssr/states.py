import numpy as np
from qssr.config import DEFAULT_TOLERANCES, Tolerances
from qssr.errors import DimensionError, InvariantError
from qssr.utils.numpy import as_complex_array, frozen, hermiticity_deviation


class PureState:
    """
    Normalized state vector.

    Attributes:
        amplitudes: Read-only complex vector of unit Euclidean norm.
        dim: Length of the vector.
    """

    def __init__(self, amplitudes, tolerances: Tolerances = DEFAULT_TOLERANCES):
        vector = as_complex_array(amplitudes)
        if vector.ndim != 1 or vector.size == 0:
            raise DimensionError(f"state vector must be 1-dimensional, got shape {vector.shape}")
        if not np.all(np.isfinite(vector)):
            raise InvariantError("state vector has non-finite entries")
        norm = float(np.linalg.norm(vector))
        if abs(norm - 1.0) > tolerances.exact:
            raise InvariantError(f"state vector norm {norm!r} differs from 1")
        self.amplitudes = frozen(vector)
        self.dim = vector.size

    @classmethod
    def normalized(cls, vector) -> "PureState":
        """Build a state from an unnormalized, nonzero vector."""
        vector = as_complex_array(vector)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise InvariantError("cannot normalize the zero vector")
        return cls(vector / norm)

    @classmethod
    def basis(cls, dim: int, index: int) -> "PureState":
        vector = np.zeros(dim, dtype=complex)
        vector[index] = 1.0
        return cls(vector)

    def density(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def __repr__(self) -> str:
        return f"PureState(dim={self.dim})"


class DensityMatrix:
    """
    Physical density matrix: hermitian, unit trace, positive semidefinite.

    Positivity is checked with a hermitian eigensolver, which handles
    rank-deficient states.

    Attributes:
        matrix: Read-only complex square matrix.
        dim: Matrix dimension.
    """

    def __init__(self, matrix, tolerances: Tolerances = DEFAULT_TOLERANCES):
        rho = as_complex_array(matrix)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DimensionError(f"density matrix must be square, got shape {rho.shape}")
        if not np.all(np.isfinite(rho)):
            raise InvariantError("density matrix has non-finite entries")
        deviation = hermiticity_deviation(rho)
        if deviation > tolerances.exact:
            raise InvariantError(f"density matrix is not hermitian (max |rho - rho^dag| = {deviation:.3e})")
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > tolerances.exact:
            raise InvariantError(f"density matrix trace {trace.real!r} differs from 1")
        lowest = float(np.min(np.linalg.eigvalsh(rho)))
        if lowest < -tolerances.psd:
            raise InvariantError(f"density matrix has negative eigenvalue {lowest:.3e}")
        self.matrix = frozen(rho)
        self.dim = rho.shape[0]

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def as_density(state) -> DensityMatrix:
    """Accept a DensityMatrix, a PureState or a raw matrix and return a DensityMatrix."""
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return state.density()
    return DensityMatrix(state)
