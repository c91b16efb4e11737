"""
Certification of synchronized states and synchronizing channels.

This module provides the pairwise symmetric/antisymmetric test for pure
states, reduced-state comparison for mixed states, and sampling-based and
exact certification of channels.
"""

from qssr.verification.verdicts import SqsVerdict, QssrVerdict
from qssr.verification.sqs import (
    PairDecomposition,
    decompose_pair,
    reduced_cross_term,
    prop1_residual,
    is_sqs_pure,
    single_party_reductions,
    is_sqs_mixed,
    purify,
    is_sqs_purified,
    mixed_symmetry_nullspace_dim,
)
from qssr.verification.certification import certify_qssr, synchronization_defect

__all__ = [
    'SqsVerdict',
    'QssrVerdict',
    'PairDecomposition',
    'decompose_pair',
    'reduced_cross_term',
    'prop1_residual',
    'is_sqs_pure',
    'single_party_reductions',
    'is_sqs_mixed',
    'purify',
    'is_sqs_purified',
    'mixed_symmetry_nullspace_dim',
    'certify_qssr',
    'synchronization_defect',
]
