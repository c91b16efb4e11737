"""
Certification of synchronized quantum states (SQS).

A state is synchronized when all of its single-party reductions coincide.
For pure states the test runs pairwise on the split |psi> = |s_ij> + |a_ij>
into the +1 and -1 eigenvectors of P_ij: the state is an SQS iff the reduced
cross term Tr_{bar i}(|a_ij><s_ij| + |s_ij><a_ij|) vanishes for every pair.
States on ancilla (x) system are handled by including the ancilla in bar i.
"""

import time
from typing import Mapping, Optional, Union
import numpy as np
import sympy
from qssr.config import DEFAULT_TOLERANCES
from qssr.errors import ArgumentError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState, as_density
from qssr.tensor_core import (
    apply_permutation,
    factor_layout,
    reduce_operator,
    reduce_outer,
    swap_permutation,
)
from qssr.utils.logging import logger
from qssr.utils.numpy import trace_norm_of_hermitian
from qssr.verification.verdicts import SqsVerdict


class PairDecomposition:
    """
    Split of a pure state into its even and odd parts under P_ij.

    Attributes:
        pair: The 1-based subsystem pair (i, j).
        sym_part: (psi + P_ij psi) / 2, unnormalized.
        anti_part: (psi - P_ij psi) / 2, unnormalized.
    """

    def __init__(self, pair: tuple[int, int], sym_part: np.ndarray, anti_part: np.ndarray):
        self.pair = pair
        self.sym_part = sym_part
        self.anti_part = anti_part

    def __repr__(self) -> str:
        return (
            f"PairDecomposition(pair={self.pair}, |s|={np.linalg.norm(self.sym_part):.3f}, "
            f"|a|={np.linalg.norm(self.anti_part):.3f})"
        )


def _amplitudes(psi: Union[PureState, np.ndarray]) -> np.ndarray:
    if isinstance(psi, PureState):
        return psi.amplitudes
    return PureState(psi).amplitudes


def decompose_pair(psi: Union[PureState, np.ndarray], shape: SystemShape, i: int, j: int) -> PairDecomposition:
    """
    Decompose psi into its symmetric and antisymmetric parts under P_ij.

    psi may live on the system space or on ancilla (x) system, in which case
    P_ij acts as the identity on the ancilla.
    """
    vector = _amplitudes(psi)
    swapped = apply_permutation(vector, shape, i, j)
    return PairDecomposition((i, j), (vector + swapped) / 2, (vector - swapped) / 2)


def reduced_cross_term(psi: Union[PureState, np.ndarray],
                       shape: SystemShape,
                       i: int,
                       j: int,
                       subsystem: Optional[int] = None) -> np.ndarray:
    """
    Tr_{bar k}(|a_ij><s_ij| + |s_ij><a_ij|) on subsystem k (default k = i).

    Computed on subsystem j instead of i, the cross term flips its sign.
    """
    decomposition = decompose_pair(psi, shape, i, j)
    dims, offset = factor_layout(decomposition.sym_part.size, shape)
    k = i if subsystem is None else subsystem
    if not 1 <= k <= shape.n:
        raise ArgumentError(f"subsystem {k} out of range 1..{shape.n}")
    half = reduce_outer(decomposition.anti_part, decomposition.sym_part, dims, [offset + k - 1])
    return half + half.conj().T


def prop1_residual(psi: Union[PureState, np.ndarray], shape: SystemShape, i: int, j: int) -> float:
    """Spectral norm of the hermitian reduced cross term; zero iff rho_i = rho_j."""
    cross = reduced_cross_term(psi, shape, i, j)
    return float(np.max(np.abs(np.linalg.eigvalsh(cross))))


def is_sqs_pure(psi: Union[PureState, np.ndarray], shape: SystemShape, tol: Optional[float] = None) -> SqsVerdict:
    """Run the pair test on all n(n-1)/2 pairs of a pure state."""
    tol = DEFAULT_TOLERANCES.certify if tol is None else tol
    start_time = time.time()
    vector = _amplitudes(psi)
    residuals = {(i, j): prop1_residual(vector, shape, i, j) for i, j in shape.pairs()}
    return SqsVerdict(residuals, tol, "cross-term", time.time() - start_time)


def single_party_reductions(rho: Union[DensityMatrix, PureState, np.ndarray], shape: SystemShape) -> list[np.ndarray]:
    """rho_1, ..., rho_n as raw matrices; any ancilla factor is traced out."""
    if isinstance(rho, PureState):
        dims, offset = factor_layout(rho.dim, shape)
        return [reduce_outer(rho.amplitudes, rho.amplitudes, dims, [offset + k]) for k in range(shape.n)]
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    dims, offset = factor_layout(matrix.shape[0], shape)
    return [reduce_operator(matrix, dims, [offset + k]) for k in range(shape.n)]


def reduction_residuals(reductions: list[np.ndarray]) -> dict[tuple[int, int], float]:
    """Trace distance 1/2 ||rho_i - rho_j||_1 for every 1-based pair."""
    n = len(reductions)
    return {
        (i + 1, j + 1): 0.5 * trace_norm_of_hermitian(reductions[i] - reductions[j])
        for i in range(n) for j in range(i + 1, n)
    }


def is_sqs_mixed(rho: Union[DensityMatrix, np.ndarray], shape: SystemShape, tol: Optional[float] = None) -> SqsVerdict:
    """
    Compare the single-party reductions of rho directly.

    Raises:
        InvariantError: If rho is not a physical density matrix.
    """
    tol = DEFAULT_TOLERANCES.certify if tol is None else tol
    start_time = time.time()
    density = as_density(rho)
    residuals = reduction_residuals(single_party_reductions(density, shape))
    return SqsVerdict(residuals, tol, "trace-distance", time.time() - start_time)


def purify(rho: Union[DensityMatrix, np.ndarray], shape: SystemShape) -> tuple[PureState, SystemShape]:
    """
    Purification sum_k sqrt(p_k) |k> (x) |v_k> of a system density matrix.

    The purifying register is placed in the ancilla slot, so the returned
    shape has ancilla dimension equal to the number of nonzero eigenvalues.
    """
    density = as_density(rho)
    values, vectors = np.linalg.eigh(density.matrix)
    values = np.clip(values, 0.0, None)
    support = values > DEFAULT_TOLERANCES.psd
    values, vectors = values[support], vectors[:, support]
    rank = int(values.size)
    purified = np.concatenate([np.sqrt(p) * vectors[:, k] for k, p in enumerate(values)])
    return PureState.normalized(purified), shape.with_ancilla(max(rank, 1))


def is_sqs_purified(rho: Union[DensityMatrix, np.ndarray], shape: SystemShape, tol: Optional[float] = None) -> SqsVerdict:
    """Pair test on a purification of rho with the purifying register in bar i."""
    tol = DEFAULT_TOLERANCES.certify if tol is None else tol
    start_time = time.time()
    psi, purified_shape = purify(rho, shape)
    residuals = {(i, j): prop1_residual(psi, purified_shape, i, j) for i, j in shape.pairs()}
    return SqsVerdict(residuals, tol, "purified", time.time() - start_time)


def mixed_symmetry_nullspace_dim(shape: SystemShape, signs: Mapping[tuple[int, int], int]) -> int:
    """
    Dimension of {psi : P_ij psi = s_ij psi for every assigned pair}.

    The rank is computed exactly over the integers. The result is 0 whenever
    two pairs sharing a subsystem carry different signs (n >= 3).

    Args:
        shape: Only n and N are used.
        signs: Map from 1-based pair (i, j) to +1 or -1.
    """
    if not signs:
        raise ArgumentError("at least one pair sign is required")
    dim = shape.system_dim
    blocks = []
    for (i, j), sign in signs.items():
        if sign not in (1, -1):
            raise ArgumentError(f"sign for pair ({i},{j}) must be +1 or -1, got {sign}")
        perm = swap_permutation(shape.n, shape.local_dim, i, j)
        block = sympy.zeros(dim, dim)
        for row, col in enumerate(perm):
            block[row, int(col)] += 1
        for k in range(dim):
            block[k, k] -= sign
        blocks.append(block)
    rank = sympy.Matrix.vstack(*blocks).rank()
    nullity = dim - int(rank)
    logger.debug(f"simultaneous eigenspace for {dict(signs)} on {shape}: dimension {nullity}")
    return nullity
