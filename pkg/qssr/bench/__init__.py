"""
Asynchronicity benchmark: Bloch vectors, random inputs and shot noise.
"""

from qssr.bench.bloch import BlochVector, bloch, asynchronicity, mean_bloch_length, reduced_bloch_vectors
from qssr.bench.sampling import (
    substream,
    haar_unitary,
    haar_state,
    haar_product_state,
    random_density_matrix,
    shot_estimate_bloch,
)
from qssr.bench.experiment import (
    AsyncReport,
    BenchConfig,
    ExperimentSummary,
    SweepResult,
    run_experiment,
    run_shots_sweep,
    log_spaced_shots,
    write_csv,
)

__all__ = [
    'BlochVector',
    'bloch',
    'asynchronicity',
    'mean_bloch_length',
    'reduced_bloch_vectors',
    'substream',
    'haar_unitary',
    'haar_state',
    'haar_product_state',
    'random_density_matrix',
    'shot_estimate_bloch',
    'AsyncReport',
    'BenchConfig',
    'ExperimentSummary',
    'SweepResult',
    'run_experiment',
    'run_shots_sweep',
    'log_spaced_shots',
    'write_csv',
]
