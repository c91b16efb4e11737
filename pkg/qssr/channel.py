"""
Quantum channels in Kraus form.

A channel on n qudits is stored as its M Kraus operators, which are also the
M blocks of the first N^n columns of a Stinespring dilation unitary:
(K_a)_{ij} = U_{a N^n + i, j}.
"""

from typing import Any, Dict, Optional, Sequence, Union
import numpy as np
from qssr.config import DEFAULT_TOLERANCES, Tolerances
from qssr.errors import ArgumentError, CompletenessError, DimensionError, OrthonormalityError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState, as_density
from qssr.tensor_core import dagger, reduce_operator
from qssr.utils.logging import logger
from qssr.utils.numpy import as_complex_array, frozen, gram_deviation, max_abs_deviation


def _output_density(matrix: np.ndarray, tolerances: Tolerances, d: int) -> DensityMatrix:
    """Hermitize a channel output and validate it with the trace slack a channel may accumulate."""
    matrix = (matrix + dagger(matrix)) / 2
    # the trace drifts by at most the completeness deviation times d
    slack = max(tolerances.exact, tolerances.completeness * d)
    return DensityMatrix(matrix, tolerances.model_copy(update={"exact": slack}))


class KrausChannel:
    """
    Completely positive trace-preserving map Phi(rho) = sum_a K_a rho K_a^dag.

    Attributes:
        shape: Subsystem layout; ``shape.ancilla_dim`` equals the number of operators.
        operators: Read-only tuple of the M Kraus matrices, each N^n x N^n.
        metadata: Free-form provenance carried through serialization.
        tolerances: Tolerances used for validation and application.
    """

    def __init__(self,
                 shape: SystemShape,
                 operators: Sequence[np.ndarray],
                 metadata: Optional[Dict[str, Any]] = None,
                 tolerances: Tolerances = DEFAULT_TOLERANCES,
                 validate: bool = True,
                 source: Optional[str] = None):
        matrices = [as_complex_array(k) for k in operators]
        if len(matrices) != shape.ancilla_dim:
            raise DimensionError(
                f"expected M = {shape.ancilla_dim} Kraus operators, got {len(matrices)}"
            )
        d = shape.system_dim
        for a, k in enumerate(matrices):
            if k.shape != (d, d):
                raise DimensionError(f"Kraus operator {a} has shape {k.shape}, expected ({d}, {d})")
            if not np.all(np.isfinite(k)):
                raise DimensionError(f"Kraus operator {a} has non-finite entries")
        self.shape = shape
        self.operators = tuple(frozen(k) for k in matrices)
        self.metadata = dict(metadata or {})
        self.tolerances = tolerances
        if validate:
            deviation = self.completeness_deviation()
            if deviation > tolerances.completeness:
                raise CompletenessError(deviation, tolerances.completeness, source)

    @classmethod
    def identity(cls, n: int, N: int) -> "KrausChannel":
        shape = SystemShape.of(n, N)
        return cls(shape, [np.eye(shape.system_dim, dtype=complex)], metadata={"name": "identity"})

    @property
    def system_dim(self) -> int:
        return self.shape.system_dim

    def stacked(self) -> np.ndarray:
        """The (M N^n) x N^n isometry formed by stacking the Kraus operators."""
        return np.vstack(self.operators)

    def completeness_deviation(self) -> float:
        """Max elementwise |sum K^dag K - I|."""
        total = sum(dagger(k) @ k for k in self.operators)
        return max_abs_deviation(total, np.eye(self.system_dim))

    def apply_operator(self, operator: np.ndarray) -> np.ndarray:
        """Apply the linear map to an arbitrary operator, without validation."""
        operator = np.asarray(operator)
        if operator.shape != (self.system_dim, self.system_dim):
            raise DimensionError(
                f"operator of shape {operator.shape} does not fit a channel on dimension {self.system_dim}"
            )
        return sum(k @ operator @ dagger(k) for k in self.operators)

    def apply(self, rho: Union[DensityMatrix, PureState, np.ndarray]) -> DensityMatrix:
        """
        Output state Phi(rho).

        Raises:
            DimensionError: If rho does not live on the channel's input space.
        """
        density = as_density(rho)
        if density.dim != self.system_dim:
            raise DimensionError(
                f"state of dimension {density.dim} does not fit a channel on dimension {self.system_dim}"
            )
        return _output_density(self.apply_operator(density.matrix), self.tolerances, self.system_dim)

    def __repr__(self) -> str:
        return f"KrausChannel(shape={self.shape}, operators={len(self.operators)})"


def from_unitary_columns(columns: np.ndarray,
                         shape: SystemShape,
                         tolerances: Tolerances = DEFAULT_TOLERANCES,
                         metadata: Optional[Dict[str, Any]] = None) -> KrausChannel:
    """
    Reshuffle N^n orthonormal columns of length M N^n into M Kraus operators.

    Args:
        columns: Matrix of shape (M N^n, N^n) whose columns are the dilation columns.
        shape: Target layout; M is taken from ``shape.ancilla_dim``.

    Raises:
        OrthonormalityError: If the columns deviate from orthonormality.
    """
    columns = as_complex_array(columns, ndim=2)
    d, m = shape.system_dim, shape.ancilla_dim
    if columns.shape != (m * d, d):
        raise DimensionError(f"columns have shape {columns.shape}, expected ({m * d}, {d})")
    deviation = gram_deviation(columns)
    if deviation > tolerances.orthonormality:
        raise OrthonormalityError(deviation, tolerances.orthonormality)
    operators = list(columns.reshape(m, d, d))
    return KrausChannel(shape, operators, metadata=metadata, tolerances=tolerances)


def complete_dilation(channel: KrausChannel) -> np.ndarray:
    """
    Unitary U on ancilla (x) system with U(|0>_E (x) psi) = sum_a |a>_E (x) K_a psi.

    The first N^n columns are the stacked Kraus operators; the remaining
    columns are modified Gram-Schmidt completions of standard basis vectors,
    each swept twice against everything chosen so far.

    Raises:
        OrthonormalityError: If the completed matrix fails the unitarity check.
    """
    isometry = channel.stacked()
    total = isometry.shape[0]
    basis = [isometry[:, j] for j in range(isometry.shape[1])]
    # squared norm of each standard vector projected on the complement
    remaining = 1.0 - np.sum(np.abs(isometry) ** 2, axis=1)
    passes = 0
    while len(basis) < total:
        pivot = int(np.argmax(remaining))
        vector = np.zeros(total, dtype=complex)
        vector[pivot] = 1.0
        for _ in range(2):
            for column in basis:
                vector = vector - column * np.vdot(column, vector)
            passes += 1
        vector = vector / np.linalg.norm(vector)
        basis.append(vector)
        remaining = remaining - np.abs(vector) ** 2
        remaining[pivot] = -np.inf
    unitary = np.column_stack(basis)
    logger.debug(f"completed dilation of {channel} to {total}x{total} with {passes} projection passes")
    deviation = gram_deviation(unitary)
    if deviation > channel.tolerances.orthonormality:
        raise OrthonormalityError(deviation, channel.tolerances.orthonormality, what="dilation columns")
    return unitary


def stinespring_apply(unitary: np.ndarray,
                      shape: SystemShape,
                      rho: Union[DensityMatrix, PureState, np.ndarray],
                      tolerances: Tolerances = DEFAULT_TOLERANCES) -> DensityMatrix:
    """Tr_E[U (|0><0|_E (x) rho) U^dag] for a dilation unitary on ancilla (x) system."""
    density = as_density(rho)
    d, m = shape.system_dim, shape.ancilla_dim
    unitary = np.asarray(unitary)
    if unitary.shape != (m * d, m * d) or density.dim != d:
        raise DimensionError(
            f"unitary of shape {unitary.shape} and state of dimension {density.dim} do not match {shape}"
        )
    embedded = np.zeros((m * d, m * d), dtype=complex)
    embedded[:d, :d] = density.matrix
    joint = unitary @ embedded @ dagger(unitary)
    return _output_density(reduce_operator(joint, [m, d], [1]), tolerances, d)


def _check_same_system(first: KrausChannel, second: KrausChannel) -> None:
    if (first.shape.n, first.shape.local_dim) != (second.shape.n, second.shape.local_dim):
        raise DimensionError(f"channels act on different systems: {first.shape} and {second.shape}")


def compose(second: KrausChannel, first: KrausChannel) -> KrausChannel:
    """The channel second o first, with the M1 M2 Kraus products B_b A_a."""
    _check_same_system(first, second)
    operators = [b @ a for a in first.operators for b in second.operators]
    shape = first.shape.with_ancilla(len(operators))
    return KrausChannel(shape, operators, metadata={"composed_of": [first.metadata, second.metadata]},
                        tolerances=first.tolerances)


def mix_outputs(p: float,
                first: KrausChannel,
                second: KrausChannel,
                rho: Union[DensityMatrix, PureState, np.ndarray]) -> DensityMatrix:
    """p Phi_1(rho) + (1 - p) Phi_2(rho), the action of the convex combination."""
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"mixing weight must lie in [0, 1], got {p}")
    _check_same_system(first, second)
    mixed = p * first.apply(rho).matrix + (1.0 - p) * second.apply(rho).matrix
    tolerances = first.tolerances.model_copy(
        update={"completeness": max(first.tolerances.completeness, second.tolerances.completeness)}
    )
    return _output_density(mixed, tolerances, first.system_dim)


def replacement_channel(n: int, N: int, sigma: Union[DensityMatrix, PureState, np.ndarray]) -> KrausChannel:
    """
    The channel rho -> sigma Tr(rho).

    Kraus operators are sqrt(p_k) |v_k><l| over the eigenpairs (p_k, v_k) of
    sigma in its support and all basis vectors |l>.
    """
    target = as_density(sigma)
    shape = SystemShape.of(n, N)
    d = shape.system_dim
    if target.dim != d:
        raise DimensionError(f"replacement state has dimension {target.dim}, expected {d}")
    values, vectors = np.linalg.eigh(target.matrix)
    operators = []
    for p, v in zip(values, vectors.T):
        if p <= DEFAULT_TOLERANCES.psd:
            continue
        for l in range(d):
            k = np.zeros((d, d), dtype=complex)
            k[:, l] = np.sqrt(p) * v
            operators.append(k)
    return KrausChannel(shape.with_ancilla(len(operators)), operators, metadata={"name": "replacement"})
