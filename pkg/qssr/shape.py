from itertools import combinations
from pydantic import BaseModel, ConfigDict, Field, model_validator
from qssr.config import MAX_DENSE_DIM


class SystemShape(BaseModel):
    """
    Dimensions of n qudits of local dimension N plus an M-dimensional ancilla.

    Basis states of the joint space are written |k; i_1, ..., i_n> with the
    ancilla index k as the most significant digit and the subsystem digits in
    big-endian order, so the flat index is k * N^n + sum_m i_m * N^(n - m).

    Attributes:
        n: Number of primary subsystems.
        local_dim: Local dimension N of every subsystem.
        ancilla_dim: Ancilla dimension M; equals the number of Kraus operators.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2, description="number of subsystems")
    local_dim: int = Field(ge=2, description="local dimension N")
    ancilla_dim: int = Field(default=1, ge=1, description="ancilla dimension M")

    @model_validator(mode="after")
    def _check_addressable(self) -> "SystemShape":
        if self.ancilla_dim * self.local_dim ** self.n > MAX_DENSE_DIM ** 2:
            raise ValueError(
                f"M*N^n = {self.ancilla_dim * self.local_dim ** self.n} exceeds the "
                f"addressable index range"
            )
        return self

    @classmethod
    def of(cls, n: int, N: int, M: int = 1) -> "SystemShape":
        return cls(n=n, local_dim=N, ancilla_dim=M)

    @property
    def system_dim(self) -> int:
        """N^n, the dimension of the primary system."""
        return self.local_dim ** self.n

    @property
    def total_dim(self) -> int:
        """M * N^n, the dimension of ancilla plus system."""
        return self.ancilla_dim * self.system_dim

    @property
    def system_dims(self) -> list[int]:
        return [self.local_dim] * self.n

    def pairs(self) -> list[tuple[int, int]]:
        """All subsystem pairs (i, j), 1-based with i < j."""
        return list(combinations(range(1, self.n + 1), 2))

    def with_ancilla(self, ancilla_dim: int) -> "SystemShape":
        return SystemShape(n=self.n, local_dim=self.local_dim, ancilla_dim=ancilla_dim)

    def __str__(self) -> str:
        return f"(n={self.n}, N={self.local_dim}, M={self.ancilla_dim})"
