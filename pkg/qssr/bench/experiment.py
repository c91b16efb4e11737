"""
Asynchronicity benchmark under simulated shot noise.

Each run draws Haar-random product inputs, measures the asynchronicity of the
exact input reductions, applies the channel and measures the asynchronicity
of the output reductions estimated from a finite number of shots per Pauli
axis. State k uses the seed ``master_seed ^ k``, so every state can be
processed independently.
"""

import csv
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Union
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from qssr.bench.bloch import asynchronicity, mean_bloch_length, reduced_bloch_vectors, reduced_qubit_states
from qssr.bench.sampling import haar_product_state, shot_estimate_bloch, substream
from qssr.channel import KrausChannel
from qssr.config import DEFAULT_SEED
from qssr.errors import ArgumentError, UnsupportedMeasureError
from qssr.utils.logging import logger

CSV_COLUMNS = ["state_id", "seed", "A_init", "A_final", "mu_r_init", "mu_r_final", "shots"]


class BenchConfig(BaseModel):
    """
    Attributes:
        states: Number of random initial states N_s.
        shots: Shots N_r per Bloch component; ignored in exact mode.
        seed: Master seed.
        exact: Use exact output Bloch vectors instead of shot estimates.
        workers: Threads; the results do not depend on it.
    """
    model_config = ConfigDict(frozen=True)

    states: int = Field(default=77, ge=1)
    shots: int = Field(default=204800, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0)
    exact: bool = False
    workers: int = Field(default=1, ge=1)


class AsyncReport(BaseModel):
    """Asynchronicity of one initial state before and after the channel."""
    model_config = ConfigDict(frozen=True)

    state_id: int
    seed: int
    A_init: float = Field(ge=0)
    A_final: float = Field(ge=0)
    mu_r_init: float
    mu_r_final: float
    shots: Optional[int]


class ExperimentSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: BenchConfig
    reports: list[AsyncReport]

    @property
    def a_bar_init(self) -> float:
        return float(np.mean([r.A_init for r in self.reports]))

    @property
    def a_bar_final(self) -> float:
        return float(np.mean([r.A_final for r in self.reports]))

    @property
    def median_a_final(self) -> float:
        return float(np.median([r.A_final for r in self.reports]))

    def summary_line(self) -> str:
        return f"A_bar_init={self.a_bar_init!r} A_bar_final={self.a_bar_final!r}"


class SweepResult(BaseModel):
    """Median output asynchronicity at each shot count and its log-log slope."""
    model_config = ConfigDict(frozen=True)

    shots: list[int]
    median_a_final: list[float]
    slope: Optional[float]
    summaries: list[ExperimentSummary]


def _measure_state(channel: KrausChannel, config: BenchConfig, state_id: int) -> AsyncReport:
    shape = channel.shape.with_ancilla(1)
    state_seed = config.seed ^ state_id
    psi = haar_product_state(shape, substream(state_seed))
    initial = reduced_bloch_vectors(psi, shape)
    output = channel.apply(psi)
    if config.exact:
        final = reduced_bloch_vectors(output, shape)
    else:
        final = [
            shot_estimate_bloch(rho, config.shots, [state_seed, 1, k])
            for k, rho in enumerate(reduced_qubit_states(output, shape))
        ]
    return AsyncReport(
        state_id=state_id,
        seed=state_seed,
        A_init=asynchronicity(initial),
        A_final=asynchronicity(final),
        mu_r_init=mean_bloch_length(initial),
        mu_r_final=mean_bloch_length(final),
        shots=None if config.exact else config.shots,
    )


def run_experiment(channel: KrausChannel, config: BenchConfig = BenchConfig()) -> ExperimentSummary:
    """
    Benchmark a channel on qubit subsystems.

    Raises:
        UnsupportedMeasureError: If the subsystems are not qubits.
    """
    if channel.shape.local_dim != 2:
        raise UnsupportedMeasureError(
            f"the asynchronicity benchmark needs qubit subsystems, got N = {channel.shape.local_dim}"
        )
    ids = range(config.states)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(lambda k: _measure_state(channel, config, k), ids))
    else:
        reports = [_measure_state(channel, config, k) for k in ids]
    summary = ExperimentSummary(config=config, reports=reports)
    mode = "exact" if config.exact else f"{config.shots} shots"
    logger.info(f"{config.states} states, {mode}: {summary.summary_line()}")
    return summary


def log_spaced_shots(lo: int, hi: int, steps: int) -> list[int]:
    """``steps`` integer shot counts from lo to hi inclusive, evenly spaced in log."""
    if lo < 1 or hi < lo or steps < 1:
        raise ArgumentError(f"invalid shot range {lo}:{hi}:{steps}")
    if steps == 1 or lo == hi:
        return [lo]
    values = np.rint(np.logspace(np.log10(lo), np.log10(hi), steps)).astype(int)
    return sorted(set(int(v) for v in values))


def run_shots_sweep(channel: KrausChannel,
                    shots: Sequence[int],
                    config: BenchConfig = BenchConfig()) -> SweepResult:
    """Same initial states at every shot count; slope of log10 median A_final against log10 shots."""
    summaries = [run_experiment(channel, config.model_copy(update={"shots": s, "exact": False})) for s in shots]
    medians = [s.median_a_final for s in summaries]
    slope = None
    if len(shots) >= 2 and all(m > 0 for m in medians):
        slope = float(np.polyfit(np.log10(shots), np.log10(medians), 1)[0])
    logger.info(f"shots sweep {list(shots)}: slope {slope}")
    return SweepResult(shots=list(shots), median_a_final=medians, slope=slope, summaries=summaries)


def write_csv(reports: Sequence[AsyncReport],
              path: Union[str, Path],
              provenance: Optional[Dict[str, Any]] = None) -> None:
    """Per-state rows in state order, after ``#`` provenance lines."""
    with open(path, "w", newline="") as f:
        for key, value in (provenance or {}).items():
            f.write(f"# {key}: {value}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow([r.state_id, r.seed, repr(r.A_init), repr(r.A_final),
                             repr(r.mu_r_init), repr(r.mu_r_final), "" if r.shots is None else r.shots])
