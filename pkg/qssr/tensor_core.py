"""
Dense linear algebra for multipartite systems.

Factor positions passed to :func:`partial_trace` and :func:`reduce_operator`
are 0-based positions into ``dims``. Subsystem labels in pair operations
(:func:`permutation_operator`) are 1-based, as in P_12.
"""

from functools import reduce
from math import prod
from typing import Sequence, Union
import numpy as np
from qssr.config import MAX_DENSE_DIM
from qssr.errors import ArgumentError, DimensionError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState, as_density


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product a (x) b; the second factor is the less significant one."""
    a = np.asarray(a)
    b = np.asarray(b)
    rows = a.shape[0] * b.shape[0]
    cols = (a.shape[1] if a.ndim > 1 else 1) * (b.shape[1] if b.ndim > 1 else 1)
    if max(rows, cols) > MAX_DENSE_DIM:
        raise DimensionError(f"Kronecker product of dimension {rows}x{cols} exceeds {MAX_DENSE_DIM}")
    return np.kron(a, b)


def kron_all(*factors: np.ndarray) -> np.ndarray:
    if not factors:
        raise ArgumentError("kron_all needs at least one factor")
    return reduce(kron, factors)


def dagger(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).conj().T


def _check_keep(dims: Sequence[int], keep: Sequence[int]) -> list[int]:
    keep = [int(k) for k in keep]
    if not keep:
        raise ArgumentError("keep must name at least one factor")
    if len(set(keep)) != len(keep):
        raise ArgumentError(f"keep has repeated factors: {keep}")
    for k in keep:
        if not 0 <= k < len(dims):
            raise ArgumentError(f"factor {k} out of range for {len(dims)} factors")
    return keep


def reduce_operator(operator: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """
    Partial trace of an arbitrary (not necessarily physical) operator.

    Args:
        operator: Square matrix on the space prod(dims).
        dims: Factor dimensions, most significant first.
        keep: 0-based factor positions to keep; the result is ordered as in ``keep``.

    Returns:
        The reduced operator on the kept factors.
    """
    dims = [int(d) for d in dims]
    keep = _check_keep(dims, keep)
    total = prod(dims)
    operator = np.asarray(operator)
    if operator.shape != (total, total):
        raise DimensionError(f"operator shape {operator.shape} does not match dims {dims}")
    k = len(dims)
    tensor = operator.reshape(dims + dims)
    row_axes = list(range(k))
    col_axes = [k + m if m in keep else m for m in range(k)]
    out_axes = keep + [k + m for m in keep]
    reduced = np.einsum(tensor, row_axes + col_axes, out_axes)
    kept_dim = prod(dims[m] for m in keep)
    return reduced.reshape(kept_dim, kept_dim)


def reduce_outer(ket: np.ndarray, bra: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Partial trace of |ket><bra| without forming the full outer product."""
    dims = [int(d) for d in dims]
    keep = _check_keep(dims, keep)
    ket = np.asarray(ket)
    bra = np.asarray(bra)
    if ket.shape != (prod(dims),) or bra.shape != ket.shape:
        raise DimensionError(f"vectors of shape {ket.shape}, {bra.shape} do not match dims {dims}")
    k = len(dims)
    ket_axes = list(range(k))
    bra_axes = [k + m if m in keep else m for m in range(k)]
    out_axes = keep + [k + m for m in keep]
    reduced = np.einsum(ket.reshape(dims), ket_axes, bra.conj().reshape(dims), bra_axes, out_axes)
    kept_dim = prod(dims[m] for m in keep)
    return reduced.reshape(kept_dim, kept_dim)


def partial_trace(rho: Union[DensityMatrix, PureState, np.ndarray],
                  dims: Sequence[int],
                  keep: Sequence[int]) -> DensityMatrix:
    """
    Reduced density matrix on the factors listed in ``keep``.

    Raises:
        DimensionError: If prod(dims) differs from the dimension of rho.
        ArgumentError: If keep is empty, repeats a factor or is out of range.
    """
    if isinstance(rho, PureState):
        reduced = reduce_outer(rho.amplitudes, rho.amplitudes, dims, keep)
    else:
        reduced = reduce_operator(as_density(rho).matrix, dims, keep)
    return DensityMatrix(reduced)


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise ArgumentError(f"a transposition needs two distinct subsystems, got i = j = {i}")
    for label in (i, j):
        if not 1 <= label <= n:
            raise ArgumentError(f"subsystem {label} out of range 1..{n}")


def swap_permutation(n: int, N: int, i: int, j: int) -> np.ndarray:
    """
    Index map of the transposition of subsystems i and j (1-based).

    Entry k is the flat index whose digits are those of k with digits i and j
    exchanged, so (P_ij v)[k] = v[perm[k]].
    """
    _check_pair(n, i, j)
    labels = np.arange(N ** n).reshape([N] * n)
    return np.swapaxes(labels, i - 1, j - 1).reshape(-1)


def permutation_operator(shape: SystemShape, i: int, j: int) -> np.ndarray:
    """P_ij on the N^n system space: unitary, hermitian and an involution."""
    perm = swap_permutation(shape.n, shape.local_dim, i, j)
    return np.eye(shape.system_dim, dtype=complex)[perm]


def embedded_permutation(shape: SystemShape, i: int, j: int) -> np.ndarray:
    """I_M (x) P_ij on the ancilla plus system space."""
    return kron(np.eye(shape.ancilla_dim, dtype=complex), permutation_operator(shape, i, j))


def factor_layout(dim: int, shape: SystemShape) -> tuple[list[int], int]:
    """
    Factor dimensions for a vector or matrix of size ``dim``.

    Returns the dims list and the position offset of subsystem 1: the system
    space alone has offset 0, ancilla plus system has offset 1.
    """
    if dim == shape.system_dim:
        return shape.system_dims, 0
    if dim == shape.total_dim and shape.ancilla_dim > 1:
        return [shape.ancilla_dim] + shape.system_dims, 1
    raise DimensionError(
        f"dimension {dim} matches neither N^n = {shape.system_dim} nor M*N^n = {shape.total_dim}"
    )


def apply_permutation(vector: np.ndarray, shape: SystemShape, i: int, j: int) -> np.ndarray:
    """P_ij applied to a system vector, or I_M (x) P_ij to an ancilla plus system vector."""
    vector = np.asarray(vector)
    _check_pair(shape.n, i, j)
    dims, offset = factor_layout(vector.size, shape)
    tensor = vector.reshape(dims)
    return np.swapaxes(tensor, offset + i - 1, offset + j - 1).reshape(-1)


def basis_index(shape: SystemShape, ancilla: int, digits: Sequence[int]) -> int:
    """Flat index of |ancilla; digits> with the ancilla as most significant digit."""
    if not 0 <= ancilla < shape.ancilla_dim:
        raise ArgumentError(f"ancilla index {ancilla} out of range 0..{shape.ancilla_dim - 1}")
    if len(digits) != shape.n:
        raise ArgumentError(f"expected {shape.n} digits, got {len(digits)}")
    flat = ancilla
    for digit in digits:
        if not 0 <= digit < shape.local_dim:
            raise ArgumentError(f"digit {digit} out of range 0..{shape.local_dim - 1}")
        flat = flat * shape.local_dim + int(digit)
    return flat


def digits_of(shape: SystemShape, flat: int) -> tuple[int, tuple[int, ...]]:
    """Inverse of :func:`basis_index`."""
    if not 0 <= flat < shape.total_dim:
        raise ArgumentError(f"flat index {flat} out of range 0..{shape.total_dim - 1}")
    digits = []
    for _ in range(shape.n):
        flat, digit = divmod(flat, shape.local_dim)
        digits.append(digit)
    return flat, tuple(reversed(digits))
