"""
Construction of synchronizing channels.

The pipeline: pick a unitary U on the span of (anti)symmetric basis states
of ancilla (x) system, keep its first N^n columns, express them in the
computational basis of the M N^n dimensional space, and cut the resulting
isometry into M Kraus operators.
"""

import re
from typing import Optional, Sequence, Union
import numpy as np
from qssr.builder.embedding import asym_basis, embed_antisymmetric, embed_symmetric, sym_basis
from qssr.builder.modes import SymmetryMode
from qssr.builder.swap import SwapRepresentation
from qssr.bench.sampling import haar_unitary, substream
from qssr.channel import KrausChannel, from_unitary_columns
from qssr.config import DEFAULT_TOLERANCES, Tolerances
from qssr.dimensions import asym_dim, min_ancilla_antisymmetric, min_ancilla_symmetric, sym_dim
from qssr.errors import ArgumentError, CapacityError, DimensionError, OrthonormalityError, SynchronizationError
from qssr.shape import SystemShape
from qssr.utils.logging import logger
from qssr.utils.numpy import as_complex_array, gram_deviation
from qssr.verification.certification import synchronization_defect

SeedUnitary = Union[str, np.ndarray, None]

_RANDOM_SEED = re.compile(r"^random\((\d+)\)$")


def describe_seed(seed_unitary: SeedUnitary) -> str:
    if seed_unitary is None:
        return "identity"
    if isinstance(seed_unitary, str):
        return seed_unitary
    return "matrix"


def resolve_seed_unitary(seed_unitary: SeedUnitary,
                         dim: int,
                         tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Turn "identity", "random(S)" or an explicit matrix into a dim x dim unitary.

    Raises:
        ArgumentError: For an unknown seed description.
        DimensionError: For a matrix of the wrong size.
        OrthonormalityError: For a matrix that is not unitary.
    """
    if seed_unitary is None or (isinstance(seed_unitary, str) and seed_unitary == "identity"):
        return np.eye(dim, dtype=complex)
    if isinstance(seed_unitary, str):
        match = _RANDOM_SEED.match(seed_unitary.strip())
        if match is None:
            raise ArgumentError(f"seed unitary must be 'identity', 'random(S)' or a matrix, got {seed_unitary!r}")
        return haar_unitary(dim, substream(int(match.group(1))))
    matrix = as_complex_array(seed_unitary)
    if matrix.shape != (dim, dim):
        raise DimensionError(f"seed unitary has shape {matrix.shape}, expected ({dim}, {dim})")
    deviation = gram_deviation(matrix)
    if deviation > tolerances.orthonormality:
        raise OrthonormalityError(deviation, tolerances.orthonormality, what="seed unitary columns")
    return matrix


def check_feasibility(shape: SystemShape, mode: SymmetryMode) -> int:
    """
    Check that N^n orthonormal columns fit into the chosen subspace.

    Returns:
        The subspace dimension, i.e. the size of the seed unitary.

    Raises:
        CapacityError: Quoting the lower bound on M when they do not.
    """
    n, N, M = shape.n, shape.local_dim, shape.ancilla_dim
    sym, asym = mode.block_counts(shape)
    if asym > 0 and asym_dim(n, N) == 0:
        raise CapacityError(f"no antisymmetric subspace exists for n = {n} > N = {N}")
    capacity = sym * sym_dim(n, N) + asym * asym_dim(n, N)
    if capacity >= shape.system_dim:
        return capacity
    if mode.kind == "symmetric":
        bound = f"M >= ceil(N^n / C(n+N-1, n)) = {min_ancilla_symmetric(n, N)}"
    elif mode.kind == "antisymmetric":
        bound = f"M >= ceil(N^n / C(N, n)) = {min_ancilla_antisymmetric(n, N)}"
    else:
        bound = f"{sym} * C(n+N-1, n) + {asym} * C(N, n) >= N^n"
    raise CapacityError(
        f"{mode} columns for {shape} span only {capacity} < N^n = {shape.system_dim} dimensions; need {bound}"
    )


def column_basis(shape: SystemShape, mode: SymmetryMode) -> np.ndarray:
    """
    Orthonormal basis of the column subspace as an (M N^n) x D matrix.

    Ancilla blocks with symmetric columns come first, then antisymmetric ones.
    """
    sym, asym = mode.block_counts(shape)
    columns = []
    for ancilla in range(sym):
        columns += [embed_symmetric(shape, ancilla, idx).amplitudes for idx in sym_basis(shape)]
    for ancilla in range(sym, sym + asym):
        columns += [embed_antisymmetric(shape, ancilla, idx).amplitudes for idx in asym_basis(shape)]
    return np.column_stack(columns)


def _assemble(shape: SystemShape,
              basis: np.ndarray,
              seed_unitary: SeedUnitary,
              tolerances: Tolerances,
              metadata: dict) -> KrausChannel:
    unitary = resolve_seed_unitary(seed_unitary, basis.shape[1], tolerances)
    columns = basis @ unitary[:, :shape.system_dim]
    return from_unitary_columns(columns, shape, tolerances, metadata)


def build(shape: SystemShape,
          mode: SymmetryMode,
          seed_unitary: SeedUnitary = "identity",
          tolerances: Tolerances = DEFAULT_TOLERANCES) -> KrausChannel:
    """
    Build a synchronizer whose Kraus columns all carry the symmetry of ``mode``.

    Args:
        shape: Layout; M = shape.ancilla_dim is the number of Kraus operators.
        mode: Column symmetry. Modes with swap representations are built by
            :func:`build_mixed_representation`.
        seed_unitary: "identity", "random(S)" or a D x D unitary, where D is
            the dimension of the column subspace.

    Raises:
        CapacityError: If N^n columns do not fit.
    """
    if mode.swap_representations is not None:
        return build_mixed_representation(shape, list(mode.swap_representations), mode.signs(shape),
                                          seed_unitary, tolerances=tolerances)
    capacity = check_feasibility(shape, mode)
    logger.info(f"building {mode} synchronizer for {shape} from a {capacity}-dimensional seed unitary")
    metadata = {"construction": str(mode), "seed_unitary": describe_seed(seed_unitary)}
    return _assemble(shape, column_basis(shape, mode), seed_unitary, tolerances, metadata)


def build_mixed_representation(shape: SystemShape,
                               reps: Sequence[SwapRepresentation],
                               signs: Sequence[int],
                               seed_unitary: SeedUnitary = "identity",
                               require_qssr: bool = True,
                               tolerances: Tolerances = DEFAULT_TOLERANCES) -> KrausChannel:
    """
    Two-party synchronizer where Kraus operator a has its columns in the
    sign_a eigenspace of its own exchange operator reps[a].

    Args:
        shape: Layout with n = 2.
        reps: One exchange representation per Kraus operator.
        signs: One eigenvalue sign (+1 or -1) per Kraus operator.
        seed_unitary: As for :func:`build`, on the direct sum of the eigenspaces.
        require_qssr: Run the exact certificate and reject channels that do
            not synchronize. Twisted representations can fail it.

    Raises:
        ArgumentError: If n != 2 or the lists do not have M entries.
        CapacityError: If the eigenspaces hold fewer than N^2 columns.
        SynchronizationError: If require_qssr is set and the certificate fails.
    """
    if shape.n != 2:
        raise ArgumentError(f"swap representations are supported for n = 2 only, got n = {shape.n}")
    M, N = shape.ancilla_dim, shape.local_dim
    if len(reps) != M or len(signs) != M:
        raise ArgumentError(f"need M = {M} representations and signs, got {len(reps)} and {len(signs)}")
    for rep in reps:
        if rep.local_dim != N:
            raise ArgumentError(f"{rep} does not act on N = {N} levels")
    columns = []
    for ancilla, (rep, sign) in enumerate(zip(reps, signs)):
        marker = np.zeros(M, dtype=complex)
        marker[ancilla] = 1.0
        columns += [np.kron(marker, v) for v in rep.eigenspace_basis(sign)]
    if len(columns) < shape.system_dim:
        raise CapacityError(
            f"eigenspaces for signs {list(signs)} span only {len(columns)} < N^2 = {shape.system_dim} dimensions"
        )
    logger.info(f"building mixed-representation synchronizer for {shape}, signs {list(signs)}")
    metadata = {
        "construction": "mixed-representation",
        "signs": [int(s) for s in signs],
        "representations": [rep.to_dict() for rep in reps],
        "seed_unitary": describe_seed(seed_unitary),
    }
    channel = _assemble(shape, np.column_stack(columns), seed_unitary, tolerances, metadata)
    if require_qssr:
        defect = synchronization_defect(channel)
        if defect > tolerances.certify:
            raise SynchronizationError(
                f"channel built from {list(reps)} with signs {list(signs)} is not a synchronizer "
                f"(exact defect {defect:.3e})"
            )
    return channel
