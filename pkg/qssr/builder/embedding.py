"""
Embedding of sorted multi-indices into (anti)symmetric states.

A sorted multi-index (i_1 <= ... <= i_n) labels one basis vector of the
symmetric subspace: the uniform superposition over its orbit of distinct
arrangements. A strictly increasing multi-index labels one antisymmetric
basis vector, the signed sum over all permutations.
"""

from collections import Counter
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial, prod, sqrt
from typing import Iterable
import numpy as np
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_permutations
from qssr.errors import ArgumentError
from qssr.shape import SystemShape
from qssr.states import PureState
from qssr.tensor_core import basis_index


class MultiIndex(tuple):
    """
    Sorted tuple of subsystem levels.

    Attributes:
        orbit_size: Number of distinct arrangements, n! / prod(multiplicity!).
        is_strict: True when all levels are distinct.
    """

    def __new__(cls, levels: Iterable[int]) -> "MultiIndex":
        levels = tuple(int(level) for level in levels)
        if not levels:
            raise ArgumentError("a multi-index needs at least one level")
        if any(level < 0 for level in levels):
            raise ArgumentError(f"levels must be non-negative: {levels}")
        if list(levels) != sorted(levels):
            raise ArgumentError(f"multi-index must be sorted: {levels}")
        return super().__new__(cls, levels)

    @property
    def orbit_size(self) -> int:
        multiplicities = Counter(self).values()
        return factorial(len(self)) // prod(factorial(m) for m in multiplicities)

    @property
    def is_strict(self) -> bool:
        return len(set(self)) == len(self)

    def arrangements(self) -> list[tuple[int, ...]]:
        """Distinct arrangements in lexicographic order."""
        return [tuple(p) for p in multiset_permutations(list(self))]

    def __repr__(self) -> str:
        return f"MultiIndex{tuple(self)}"


def sym_basis(shape: SystemShape) -> list[MultiIndex]:
    """All C(n+N-1, n) sorted multi-indices, lexicographically ordered."""
    return [MultiIndex(c) for c in combinations_with_replacement(range(shape.local_dim), shape.n)]


def asym_basis(shape: SystemShape) -> list[MultiIndex]:
    """All C(N, n) strictly increasing multi-indices; empty when n > N."""
    return [MultiIndex(c) for c in combinations(range(shape.local_dim), shape.n)]


def _check_index(shape: SystemShape, ancilla: int, idx: MultiIndex) -> MultiIndex:
    idx = idx if isinstance(idx, MultiIndex) else MultiIndex(idx)
    if len(idx) != shape.n:
        raise ArgumentError(f"multi-index {tuple(idx)} has {len(idx)} levels, expected n = {shape.n}")
    if idx[-1] >= shape.local_dim:
        raise ArgumentError(f"level {idx[-1]} out of range for N = {shape.local_dim}")
    if not 0 <= ancilla < shape.ancilla_dim:
        raise ArgumentError(f"ancilla index {ancilla} out of range 0..{shape.ancilla_dim - 1}")
    return idx


def embed_symmetric(shape: SystemShape, ancilla: int, idx: MultiIndex) -> PureState:
    """|ancilla> (x) the normalized symmetrization of |idx>, on the M N^n space."""
    idx = _check_index(shape, ancilla, idx)
    vector = np.zeros(shape.total_dim, dtype=complex)
    amplitude = 1.0 / sqrt(idx.orbit_size)
    for arrangement in idx.arrangements():
        vector[basis_index(shape, ancilla, arrangement)] = amplitude
    return PureState(vector)


def embed_antisymmetric(shape: SystemShape, ancilla: int, idx: MultiIndex) -> PureState:
    """
    |ancilla> (x) sum_sigma sgn(sigma) |idx_sigma> / sqrt(n!).

    Raises:
        ArgumentError: If idx repeats a level; no antisymmetric state exists then.
    """
    idx = _check_index(shape, ancilla, idx)
    if not idx.is_strict:
        raise ArgumentError(f"multi-index {tuple(idx)} repeats a level, so it has no antisymmetric state")
    vector = np.zeros(shape.total_dim, dtype=complex)
    amplitude = 1.0 / sqrt(factorial(shape.n))
    for order in permutations(range(shape.n)):
        arrangement = [idx[k] for k in order]
        vector[basis_index(shape, ancilla, arrangement)] = Permutation(list(order)).signature() * amplitude
    return PureState(vector)
