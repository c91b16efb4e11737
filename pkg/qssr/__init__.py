"""
qssr: construction and certification of quantum-state synchronizers.
"""

__version__ = "0.1.0"

from qssr.shape import SystemShape
from qssr.states import PureState, DensityMatrix
from qssr.channel import KrausChannel
from qssr.builder import SymmetryMode, build, build_mixed_representation
from qssr.verification import certify_qssr, is_sqs_pure, is_sqs_mixed

__all__ = [
    'SystemShape',
    'PureState',
    'DensityMatrix',
    'KrausChannel',
    'SymmetryMode',
    'build',
    'build_mixed_representation',
    'certify_qssr',
    'is_sqs_pure',
    'is_sqs_mixed',
]
