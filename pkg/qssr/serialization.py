"""
JSON files for channels, seed matrices and states.

Complex numbers are written as [re, im] pairs and matrices row-major. Floats
use the shortest repr that round-trips binary64, so saving a loaded file
reproduces it byte for byte.
"""

import json
from pathlib import Path
from typing import Any, Dict, Literal, Optional, Union
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from qssr.channel import KrausChannel
from qssr.config import DEFAULT_TOLERANCES, Tolerances
from qssr.builder.swap import SwapRepresentation
from qssr.errors import ArgumentError, ChannelFormatError
from qssr.shape import SystemShape
from qssr.states import DensityMatrix, PureState
from qssr.utils.logging import logger
from qssr.utils.numpy import complex_to_pairs, pairs_to_complex

ComplexEntry = tuple[float, float]
ComplexMatrixData = list[list[ComplexEntry]]

PathLike = Union[str, Path]


class ChannelFile(BaseModel):
    """On-disk layout of a channel."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    format_version: Literal[1]
    n: int = Field(ge=2)
    local_dim: int = Field(alias="N", ge=2)
    ancilla_dim: int = Field(alias="M", ge=1)
    metadata: Dict[str, Any] = Field(default_factory=dict)
    kraus: list[ComplexMatrixData]

    @model_validator(mode="after")
    def _check_sizes(self) -> "ChannelFile":
        d = self.local_dim ** self.n
        if len(self.kraus) != self.ancilla_dim:
            raise ValueError(f"M = {self.ancilla_dim} but {len(self.kraus)} Kraus operators are listed")
        for a, operator in enumerate(self.kraus):
            if len(operator) != d or any(len(row) != d for row in operator):
                raise ValueError(f"Kraus operator {a} is not {d}x{d}")
        return self


class MatrixFile(BaseModel):
    """On-disk layout of a seed unitary or other complex matrix."""
    model_config = ConfigDict(extra="forbid")

    format_version: Literal[1]
    matrix: ComplexMatrixData


class StateFile(BaseModel):
    """On-disk layout of a pure state (amplitudes) or mixed state (density)."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    format_version: Literal[1]
    n: int = Field(ge=2)
    local_dim: int = Field(alias="N", ge=2)
    amplitudes: Optional[list[ComplexEntry]] = None
    density: Optional[ComplexMatrixData] = None

    @model_validator(mode="after")
    def _one_representation(self) -> "StateFile":
        if (self.amplitudes is None) == (self.density is None):
            raise ValueError("exactly one of 'amplitudes' and 'density' must be given")
        return self


def _dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload) + "\n"


def _parse(model: type[BaseModel], text: str, source: str) -> BaseModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ChannelFormatError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ChannelFormatError(f"{source}: at {location}: {first['msg']}") from e


def dumps_channel(channel: KrausChannel) -> str:
    shape = channel.shape
    payload = {
        "format_version": 1,
        "n": shape.n,
        "N": shape.local_dim,
        "M": shape.ancilla_dim,
        "metadata": channel.metadata,
        "kraus": [complex_to_pairs(k) for k in channel.operators],
    }
    return _dumps(payload)


def loads_channel(text: str,
                  source: str = "<string>",
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> KrausChannel:
    """
    Parse a channel document.

    Raises:
        ChannelFormatError: On malformed JSON or a schema violation, naming the location.
        CompletenessError: If the Kraus operators do not resolve the identity.
    """
    document = _parse(ChannelFile, text, source)
    shape = SystemShape.of(document.n, document.local_dim, document.ancilla_dim)
    operators = [pairs_to_complex(k) for k in document.kraus]
    return KrausChannel(shape, operators, metadata=document.metadata, tolerances=tolerances, source=source)


def save(channel: KrausChannel, path: PathLike) -> None:
    Path(path).write_text(dumps_channel(channel))
    logger.info(f"wrote {channel} to {path}")


def load(path: PathLike, tolerances: Tolerances = DEFAULT_TOLERANCES) -> KrausChannel:
    text = _read(path)
    channel = loads_channel(text, str(path), tolerances)
    logger.info(f"loaded {channel} from {path}")
    return channel


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ChannelFormatError(f"{path}: cannot read file: {e.strerror}") from e


def save_matrix(matrix: np.ndarray, path: PathLike) -> None:
    Path(path).write_text(_dumps({"format_version": 1, "matrix": complex_to_pairs(matrix)}))


def load_matrix(path: PathLike) -> np.ndarray:
    document = _parse(MatrixFile, _read(path), str(path))
    if not document.matrix:
        raise ChannelFormatError(f"{path}: at matrix: empty matrix")
    width = len(document.matrix[0])
    if any(len(row) != width for row in document.matrix):
        raise ChannelFormatError(f"{path}: at matrix: rows have different lengths")
    return pairs_to_complex(document.matrix)


def save_state(state: Union[PureState, DensityMatrix], shape: SystemShape, path: PathLike) -> None:
    payload: Dict[str, Any] = {"format_version": 1, "n": shape.n, "N": shape.local_dim}
    if isinstance(state, PureState):
        payload["amplitudes"] = complex_to_pairs(state.amplitudes)
    else:
        payload["density"] = complex_to_pairs(state.matrix)
    Path(path).write_text(_dumps(payload))


def load_state(path: PathLike) -> tuple[Union[PureState, DensityMatrix], SystemShape]:
    """
    Read a state file.

    Raises:
        ChannelFormatError: On a malformed file or a size that is not N^n.
        InvariantError: If the state is not normalized or not physical.
    """
    document = _parse(StateFile, _read(path), str(path))
    shape = SystemShape.of(document.n, document.local_dim)
    if document.amplitudes is not None:
        state: Union[PureState, DensityMatrix] = PureState(pairs_to_complex(document.amplitudes))
    else:
        state = DensityMatrix(pairs_to_complex(document.density))
    if state.dim != shape.system_dim:
        raise ChannelFormatError(f"{path}: state of dimension {state.dim} does not match N^n = {shape.system_dim}")
    return state, shape


class RepresentationEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    delta: float = 0.0
    phases: list[list[float]]


class RepresentationFile(BaseModel):
    """On-disk list of exchange representations, one per Kraus operator."""
    model_config = ConfigDict(extra="forbid")

    format_version: Literal[1]
    representations: list[RepresentationEntry]


def load_representations(path: PathLike) -> list[SwapRepresentation]:
    document = _parse(RepresentationFile, _read(path), str(path))
    try:
        return [SwapRepresentation(entry.delta, entry.phases) for entry in document.representations]
    except ArgumentError as e:
        raise ChannelFormatError(f"{path}: {e}") from e
