"""
Results of SQS and QSSR certification.

Both verdicts follow the same pattern: a boolean outcome, the residual that
decided it, the time spent and, when the check fails, a counterexample.
"""

from typing import Any, Dict, Optional
import numpy as np
from qssr.states import PureState
from qssr.utils.numpy import complex_to_pairs


class SqsVerdict:
    """
    Outcome of a synchronized-state test.

    Attributes:
        is_sqs: True iff every pair residual is within the tolerance.
        max_pair_residual: Largest residual over all pairs.
        per_pair_residuals: Residual for each 1-based pair (i, j).
        tolerance: Threshold used for the decision.
        method: Which residual was computed ("cross-term", "trace-distance" or "purified").
        check_time: Seconds spent on the check.
    """

    def __init__(self,
                 per_pair_residuals: Dict[tuple[int, int], float],
                 tolerance: float,
                 method: str,
                 check_time: float = 0.0):
        self.per_pair_residuals = dict(per_pair_residuals)
        self.max_pair_residual = max(self.per_pair_residuals.values(), default=0.0)
        self.tolerance = tolerance
        self.is_sqs = self.max_pair_residual <= tolerance
        self.method = method
        self.check_time = check_time

    def __bool__(self) -> bool:
        return self.is_sqs

    def __str__(self) -> str:
        result = f"SQS ({self.method}): "
        if self.is_sqs:
            result += f"SATISFIED, max residual {self.max_pair_residual:.3e} (checked in {self.check_time:.3f}s)"
        else:
            result += f"VIOLATED, max residual {self.max_pair_residual:.3e} > {self.tolerance:.1e}"
            for (i, j), residual in self.per_pair_residuals.items():
                result += f"\n  pair ({i},{j}): {residual:.3e}"
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_sqs": self.is_sqs,
            "method": self.method,
            "tolerance": self.tolerance,
            "max_pair_residual": self.max_pair_residual,
            "per_pair_residuals": {f"{i},{j}": r for (i, j), r in self.per_pair_residuals.items()},
        }


class QssrVerdict:
    """
    Outcome of a quantum-state synchronizer certification.

    Attributes:
        is_qssr: True iff the worst residual over pure inputs is within tolerance.
        worst_residual: Largest reduced-state trace distance over the pure inputs.
        samples_tested: Number of pure inputs (basis states plus random products).
        witness_state: The pure input that produced worst_residual when the check fails.
        mixed_residual: Worst residual over the random mixed cross-check inputs.
        exact_defect: Result of the exact linear certificate, when it was requested.
        tolerance: Threshold used for the decision.
        check_time: Seconds spent on the check.
    """

    def __init__(self,
                 worst_residual: float,
                 samples_tested: int,
                 tolerance: float,
                 witness_state: Optional[PureState] = None,
                 mixed_residual: Optional[float] = None,
                 exact_defect: Optional[float] = None,
                 check_time: float = 0.0):
        self.worst_residual = worst_residual
        self.samples_tested = samples_tested
        self.tolerance = tolerance
        self.is_qssr = worst_residual <= tolerance
        self.witness_state = None if self.is_qssr else witness_state
        self.mixed_residual = mixed_residual
        self.exact_defect = exact_defect
        self.check_time = check_time

    @property
    def certified_exactly(self) -> Optional[bool]:
        if self.exact_defect is None:
            return None
        return self.exact_defect <= self.tolerance

    def __bool__(self) -> bool:
        return self.is_qssr

    def __str__(self) -> str:
        if self.is_qssr:
            result = f"QSSR: yes, residual {self.worst_residual:.3e} < {self.tolerance:.0e}"
        else:
            result = f"QSSR: no, residual {self.worst_residual:.3e} > {self.tolerance:.0e}"
        result += f" ({self.samples_tested} pure inputs, {self.check_time:.3f}s)"
        if self.mixed_residual is not None:
            result += f"\nmixed-input cross-check residual: {self.mixed_residual:.3e}"
        if self.exact_defect is not None:
            result += f"\nexact linear certificate defect: {self.exact_defect:.3e}"
        if self.witness_state is not None:
            amplitudes = np.round(self.witness_state.amplitudes, 6)
            result += f"\nwitness input: {amplitudes.tolist()}"
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_qssr": self.is_qssr,
            "worst_residual": self.worst_residual,
            "samples_tested": self.samples_tested,
            "tolerance": self.tolerance,
            "mixed_residual": self.mixed_residual,
            "exact_defect": self.exact_defect,
            "witness_state": (
                None if self.witness_state is None else complex_to_pairs(self.witness_state.amplitudes)
            ),
        }
