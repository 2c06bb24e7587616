"""Pure-state amplitude tensors and their elementary manipulations.

A pure state of an m-part system with subsystem dimensions (N_1, ..., N_m)
is stored as a flat complex vector of length N_1 * ... * N_m, row-major over
the multi-index (i_1, ..., i_m).  Multi-indices are 1-based in every public
signature, matching the usual ket labelling |i_1, ..., i_m> with
i_j in {1, ..., N_j}; storage is an ordinary C-ordered numpy array.

States are immutable and never normalized implicitly: construction keeps the
amplitudes exactly as given so raw coefficient minors can be inspected, and
the measure-level operations normalize internally where they need to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError, ShapeError

# One-vs-rest bipartition, identified by the 1-based subsystem index kept
# on the row side of the corresponding matricization.
Cut = int


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense amplitude tensor of a pure multipartite state.

    Attributes
    ----------
    dims : tuple of int
        Subsystem dimensions (N_1, ..., N_m), each >= 1.
    amps : numpy.ndarray
        Complex amplitudes, flat, row-major over (i_1, ..., i_m).
        The array is read-only.
    """

    dims: tuple[int, ...]
    amps: np.ndarray

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.dims)
        if len(dims) == 0:
            raise ShapeError("dims must be nonempty")
        if any(d < 1 for d in dims):
            raise ShapeError(f"dims must be positive, got {dims}")
        amps = np.array(self.amps, dtype=np.complex128).reshape(-1)
        if amps.size != math.prod(dims):
            raise ShapeError(
                f"amplitude count {amps.size} does not match prod(dims) = "
                f"{math.prod(dims)} for dims {dims}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amps", amps)

    @property
    def subsystem_count(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.amps.size

    def norm(self) -> float:
        """Euclidean norm sqrt(sum |amp|^2)."""
        return float(np.linalg.norm(self.amps))

    def __repr__(self) -> str:
        return f"PureState(dims={self.dims}, size={self.size})"


def make_state(dims, amps) -> PureState:
    """Build a PureState from a dimension list and a flat amplitude list.

    No normalization is applied; the amplitudes are stored as given.

    Raises
    ------
    ShapeError
        If len(amps) != prod(dims) or dims is empty/non-positive.
    DegenerateStateError
        If every amplitude is zero.
    """
    state = PureState(tuple(dims), np.asarray(amps, dtype=np.complex128))
    if not np.any(state.amps):
        raise DegenerateStateError("all amplitudes are zero")
    return state


def normalize(state: PureState) -> PureState:
    """Scale the amplitudes by a positive real so that sum |amp|^2 = 1."""
    nrm = state.norm()
    if nrm == 0.0:
        raise DegenerateStateError("cannot normalize the zero vector")
    return PureState(state.dims, state.amps / nrm)


def linear_index(dims: tuple[int, ...], multi_index) -> int:
    """Row-major position of a 1-based multi-index (i_1, ..., i_m)."""
    if len(multi_index) != len(dims):
        raise IndexError(
            f"multi-index length {len(multi_index)} does not match "
            f"{len(dims)} subsystems"
        )
    flat = 0
    for i, n in zip(multi_index, dims):
        if not 1 <= i <= n:
            raise IndexError(f"index {i} out of range 1..{n}")
        flat = flat * n + (i - 1)
    return flat


def amplitude(state: PureState, multi_index) -> complex:
    """Amplitude at the 1-based multi-index (i_1, ..., i_m)."""
    return complex(state.amps[linear_index(state.dims, multi_index)])


def tensor(*states: PureState) -> PureState:
    """Tensor product; dims concatenate, amplitudes combine via kron."""
    if not states:
        raise ShapeError("tensor() needs at least one state")
    amps = states[0].amps
    dims: tuple[int, ...] = states[0].dims
    for s in states[1:]:
        amps = np.kron(amps, s.amps)
        dims = dims + s.dims
    return PureState(dims, amps)
