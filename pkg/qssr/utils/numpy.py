from typing import Any
import numpy as np


def as_complex_array(value: Any, ndim: int = None) -> np.ndarray:
    array = np.array(value, dtype=complex)
    if ndim is not None and array.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {array.shape}")
    return array


def frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only copy of ``array``."""
    copy = np.array(array, dtype=complex, copy=True)
    copy.setflags(write=False)
    return copy


def max_abs_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Largest elementwise modulus of ``a - b``."""
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def hermiticity_deviation(matrix: np.ndarray) -> float:
    return max_abs_deviation(matrix, matrix.conj().T)


def gram_deviation(columns: np.ndarray) -> float:
    """Max elementwise deviation of the Gram matrix of ``columns`` from the identity."""
    gram = columns.conj().T @ columns
    return max_abs_deviation(gram, np.eye(gram.shape[0]))


def trace_norm_of_hermitian(matrix: np.ndarray) -> float:
    return float(np.sum(np.abs(np.linalg.eigvalsh(matrix))))


def complex_to_pairs(array: np.ndarray) -> list:
    """Nested lists with every complex entry written as ``[re, im]``."""
    array = np.asarray(array)
    if array.ndim == 0:
        value = complex(array)
        return [float(value.real), float(value.imag)]
    return [complex_to_pairs(sub) for sub in array]


def pairs_to_complex(nested: Any) -> np.ndarray:
    """Inverse of :func:`complex_to_pairs`; the last axis must have length 2."""
    array = np.array(nested, dtype=float)
    if array.ndim == 0 or array.shape[-1] != 2:
        raise ValueError("complex entries must be written as [re, im] pairs")
    return array[..., 0] + 1j * array[..., 1]
