from pydantic import BaseModel, ConfigDict, Field


class Tolerances(BaseModel):
    """
    Numerical tolerances shared by all modules.

    Attributes:
        exact: Identities that hold exactly in exact arithmetic (trace, hermiticity, norms).
        psd: Lowest admissible eigenvalue magnitude below zero for density matrices.
        certify: Residual threshold for SQS and QSSR certification.
        completeness: Max elementwise deviation of sum K^dag K from the identity.
        orthonormality: Max elementwise deviation of a Gram matrix from the identity.
    """
    model_config = ConfigDict(frozen=True)

    exact: float = Field(default=1e-12, gt=0)
    psd: float = Field(default=1e-10, gt=0)
    certify: float = Field(default=1e-10, gt=0)
    completeness: float = Field(default=1e-10, gt=0)
    orthonormality: float = Field(default=1e-10, gt=0)


DEFAULT_TOLERANCES = Tolerances()

# Seed used by every randomized command when none is given.
DEFAULT_SEED = 7

# Largest matrix dimension the dense routines accept.
MAX_DENSE_DIM = 1 << 16
