"""
Closed-form counting for synchronizer construction.

N^n orthonormal columns have to fit into the M-fold symmetric (or
antisymmetric) subspace, which bounds the ancilla dimension from below. All
counts are exact integers; the symbolic forms are kept as sympy expressions.
"""

from math import comb, factorial
from typing import Optional
import sympy
from pydantic import BaseModel, ConfigDict
from qssr.errors import ArgumentError

n_, N_, M_, s_ = sympy.symbols("n N M s", integer=True, positive=True)

SYM_DIM = sympy.binomial(n_ + N_ - 1, n_)
ASYM_DIM = sympy.binomial(N_, n_)
FREE_PARAMETERS = 2 * (M_ * N_ ** n_ - 1) - (n_ - 1) * (N_ ** 2 - 1)
MANIFOLD_DIMENSION = (
    M_ * (n_ - 1) * (N_ * (N_ - 1) / 2 + 1)
    + N_ ** n_ * (2 * (s_ * SYM_DIM + (M_ - s_) * ASYM_DIM) - N_ ** n_)
)


def _check(n: int, N: int) -> None:
    if n < 2 or N < 2:
        raise ArgumentError(f"need n >= 2 and N >= 2, got n = {n}, N = {N}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def sym_dim(n: int, N: int) -> int:
    """Dimension C(n+N-1, n) of the symmetric subspace of n qudits."""
    return comb(n + N - 1, n)


def asym_dim(n: int, N: int) -> int:
    """Dimension C(N, n) of the antisymmetric subspace; 0 for n > N."""
    return comb(N, n)


def min_ancilla_symmetric(n: int, N: int) -> int:
    """Smallest M with M C(n+N-1, n) >= N^n."""
    _check(n, N)
    return _ceil_div(N ** n, sym_dim(n, N))


def min_ancilla_antisymmetric(n: int, N: int) -> Optional[int]:
    """Smallest M with M C(N, n) >= N^n, or None when n > N."""
    _check(n, N)
    if n > N:
        return None
    return _ceil_div(N ** n, asym_dim(n, N))


def manifold_dimension(n: int, N: int, M: int, sym_count: int) -> int:
    """
    Real dimension of the family of synchronizers with sym_count symmetric
    and M - sym_count antisymmetric Kraus operators, exchange phases included.

    Negative values are returned as they are; they mean the family is empty.
    """
    _check(n, N)
    if not 0 <= sym_count <= M:
        raise ArgumentError(f"sym_count must lie in 0..{M}, got {sym_count}")
    return int(MANIFOLD_DIMENSION.subs({n_: n, N_: N, M_: M, s_: sym_count}))


def free_parameter_count(n: int, N: int, M: int) -> int:
    """Real parameters of a pure state on ancilla (x) system left after the synchronization conditions."""
    _check(n, N)
    if M < 1:
        raise ArgumentError(f"M must be positive, got {M}")
    return int(FREE_PARAMETERS.subs({n_: n, N_: N, M_: M}))


def ancilla_asymptote(n: int) -> int:
    """lim_{N -> oo} N^n / C(n+N-1, n), computed symbolically; equals n!."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    x = sympy.Symbol("x", positive=True)
    ratio = x ** n / sympy.expand_func(sympy.binomial(x + n - 1, n))
    return int(sympy.limit(ratio, x, sympy.oo))


class DimReport(BaseModel):
    """Subspace dimensions and ancilla bounds for one (n, N)."""
    model_config = ConfigDict(frozen=True)

    n: int
    N: int
    sym_dim: int
    asym_dim: int
    min_ancilla_sym: int
    min_ancilla_asym: Optional[int]
    asymptote: int

    @classmethod
    def of(cls, n: int, N: int) -> "DimReport":
        return cls(
            n=n,
            N=N,
            sym_dim=sym_dim(n, N),
            asym_dim=asym_dim(n, N),
            min_ancilla_sym=min_ancilla_symmetric(n, N),
            min_ancilla_asym=min_ancilla_antisymmetric(n, N),
            asymptote=factorial(n),
        )


def table(n_max: int, N_max: int) -> list[list[DimReport]]:
    """Reports for n = 2..n_max (rows) and N = 2..N_max (columns)."""
    _check(n_max, N_max)
    return [[DimReport.of(n, N) for N in range(2, N_max + 1)] for n in range(2, n_max + 1)]


def render_table(grid: list[list[DimReport]], fmt: str = "pretty") -> str:
    """Minimal symmetric ancilla dimension, rows n and columns N."""
    if fmt not in ("pretty", "csv"):
        raise ArgumentError(f"unknown table format {fmt!r}")
    columns = [report.N for report in grid[0]] if grid else []
    if fmt == "csv":
        lines = ["n," + ",".join(f"N={N}" for N in columns)]
        lines += [f"{row[0].n}," + ",".join(str(r.min_ancilla_sym) for r in row) for row in grid]
        return "\n".join(lines) + "\n"
    width = max([len(str(r.min_ancilla_sym)) for row in grid for r in row] + [5])
    lines = ["n \\ N " + " ".join(f"{N:>{width}}" for N in columns)]
    lines += [f"{row[0].n:>5} " + " ".join(f"{r.min_ancilla_sym:>{width}}" for r in row) for row in grid]
    return "\n".join(lines) + "\n"
