"""
Construction of quantum-state synchronizers from (anti)symmetric column spaces.
"""

from qssr.builder.embedding import MultiIndex, sym_basis, asym_basis, embed_symmetric, embed_antisymmetric
from qssr.builder.swap import SwapRepresentation
from qssr.builder.modes import SymmetryMode
from qssr.builder.build import (
    resolve_seed_unitary,
    check_feasibility,
    column_basis,
    build,
    build_mixed_representation,
)
from qssr.builder.presets import PRESETS

__all__ = [
    'MultiIndex',
    'sym_basis',
    'asym_basis',
    'embed_symmetric',
    'embed_antisymmetric',
    'SwapRepresentation',
    'SymmetryMode',
    'resolve_seed_unitary',
    'check_feasibility',
    'column_basis',
    'build',
    'build_mixed_representation',
    'PRESETS',
]
