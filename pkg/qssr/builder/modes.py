from typing import Literal, Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator
from qssr.builder.swap import SwapRepresentation
from qssr.errors import ArgumentError
from qssr.shape import SystemShape


class SymmetryMode(BaseModel):
    """
    Symmetry imposed on the columns of the Kraus operators.

    Attributes:
        kind: "symmetric", "antisymmetric" or "mixed".
        sym_count: Number of Kraus operators with symmetric columns (mixed only).
        asym_count: Number of Kraus operators with antisymmetric columns (mixed only).
        swap_representations: Optional exchange operator per Kraus operator (n = 2 only).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["symmetric", "antisymmetric", "mixed"]
    sym_count: Optional[int] = Field(default=None, ge=0)
    asym_count: Optional[int] = Field(default=None, ge=0)
    swap_representations: Optional[tuple[SwapRepresentation, ...]] = None

    @model_validator(mode="after")
    def _check_counts(self) -> "SymmetryMode":
        if self.kind == "mixed":
            if self.sym_count is None or self.asym_count is None:
                raise ValueError("mixed mode needs both sym_count and asym_count")
            if self.swap_representations is not None:
                raise ValueError("mixed symmetry cannot be combined with swap representations")
        elif self.sym_count is not None or self.asym_count is not None:
            raise ValueError(f"{self.kind} mode takes no operator counts")
        return self

    @classmethod
    def symmetric(cls) -> "SymmetryMode":
        return cls(kind="symmetric")

    @classmethod
    def antisymmetric(cls) -> "SymmetryMode":
        return cls(kind="antisymmetric")

    @classmethod
    def mixed(cls, sym_count: int, asym_count: int) -> "SymmetryMode":
        return cls(kind="mixed", sym_count=sym_count, asym_count=asym_count)

    def block_counts(self, shape: SystemShape) -> tuple[int, int]:
        """(symmetric, antisymmetric) ancilla blocks for the given shape."""
        m = shape.ancilla_dim
        if self.kind == "symmetric":
            return m, 0
        if self.kind == "antisymmetric":
            return 0, m
        if self.sym_count + self.asym_count != m:
            raise ArgumentError(
                f"mixed mode counts {self.sym_count} + {self.asym_count} do not add up to M = {m}"
            )
        return self.sym_count, self.asym_count

    def signs(self, shape: SystemShape) -> list[int]:
        """Exchange eigenvalue sign for each Kraus operator, symmetric blocks first."""
        sym, asym = self.block_counts(shape)
        return [1] * sym + [-1] * asym

    def __str__(self) -> str:
        if self.kind == "mixed":
            return f"mixed({self.sym_count}:{self.asym_count})"
        return self.kind
