"""Schwarz gaps, one-vs-rest matricizations, and 2x2 minor enumeration.

The Cauchy-Schwarz inequality  |<x1|x2>|^2 <= ||x1||^2 ||x2||^2  holds with
equality exactly when the two vectors are parallel, and the Lagrange identity
expresses the gap as a sum of squared 2x2 minors of the matrix [x1; x2]:

    ||x1||^2 ||x2||^2 - |<x1|x2>|^2  =  sum_{a<b} |x1_a x2_b - x1_b x2_a|^2.

Everything here is built on that identity.  A state is unfolded along a cut
into a rows-by-rest coefficient matrix, and the squared moduli of all its 2x2
minors measure how far the rows are from mutual parallelism, i.e. how far the
cut is from being separable.

Determinism contract: minors are always enumerated in lexicographic
(row_pair, col_pair) order and accumulated with exactly rounded compensated
summation (math.fsum), so sums are bit-reproducible across runs and are
independent of any parallel scheduling of whole-matrix subtotals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import InternalConsistencyError, ShapeError
from .states import Cut, PureState

# Relative slack allowed before a negative floating-point Schwarz gap is
# treated as a bug rather than rounding.
_GAP_CLAMP_REL = 1e-12


class MinorTerm(NamedTuple):
    """One second-order minor of a matricization.

    row_pair and col_pair are 1-based positions (k_j < l_j, k < l); value is
    the determinant M[k_j,k] * M[l_j,l] - M[k_j,l] * M[l_j,k] as evaluated
    in double precision.
    """

    row_pair: tuple[int, int]
    col_pair: tuple[int, int]
    value: complex


@dataclass(frozen=True, eq=False)
class Matricization:
    """2-D view of a state split along one cut (subsystem j vs. the rest).

    Row r (1-based) fixes i_j = r; column c runs over the remaining
    subsystems' multi-indices in ascending subsystem order, row-major.
    ``entries`` is a read-only (rows x cols) complex array, 0-based like any
    numpy array; the 1-based semantic maps live in the helper methods.
    """

    cut: Cut
    row_dim: int
    remainder_dims: tuple[int, ...]
    entries: np.ndarray

    @property
    def rows(self) -> int:
        return self.row_dim

    @property
    def cols(self) -> int:
        return math.prod(self.remainder_dims) if self.remainder_dims else 1

    def column_multi_index(self, col: int) -> tuple[int, ...]:
        """1-based column position -> 1-based multi-index over the remainder."""
        if not 1 <= col <= self.cols:
            raise IndexError(f"column {col} out of range 1..{self.cols}")
        rest = []
        c = col - 1
        for n in reversed(self.remainder_dims):
            rest.append(c % n + 1)
            c //= n
        return tuple(reversed(rest))

    def column_of_multi_index(self, multi_index) -> int:
        """Inverse of column_multi_index."""
        if len(multi_index) != len(self.remainder_dims):
            raise IndexError("multi-index does not match the remainder arity")
        c = 0
        for i, n in zip(multi_index, self.remainder_dims):
            if not 1 <= i <= n:
                raise IndexError(f"index {i} out of range 1..{n}")
            c = c * n + (i - 1)
        return c + 1


def schwarz_gap(x1, x2) -> float:
    """Schwarz gap ||x1||^2 ||x2||^2 - |<x1|x2>|^2, clamped to be >= 0.

    Tiny negative floating-point results (within 1e-12 of zero relative to
    ||x1||^2 ||x2||^2) are clamped to 0; anything more negative would violate
    Cauchy-Schwarz beyond rounding and raises InternalConsistencyError.
    """
    v1 = np.asarray(x1, dtype=np.complex128).reshape(-1)
    v2 = np.asarray(x2, dtype=np.complex128).reshape(-1)
    if v1.size != v2.size:
        raise ShapeError(f"vector lengths differ: {v1.size} vs {v2.size}")
    if v1.size == 0:
        raise ShapeError("vectors must have length >= 1")
    n1 = float(np.vdot(v1, v1).real)
    n2 = float(np.vdot(v2, v2).real)
    ip = complex(np.vdot(v1, v2))
    gap = n1 * n2 - (ip.real * ip.real + ip.imag * ip.imag)
    if gap < 0.0:
        if gap >= -_GAP_CLAMP_REL * n1 * n2:
            return 0.0
        raise InternalConsistencyError(
            f"Schwarz gap {gap} below the rounding floor for scale {n1 * n2}"
        )
    return gap


def gap_equals_minor_sum(x1, x2) -> tuple[float, float]:
    """Evaluate the Schwarz gap by both routes of the Lagrange identity.

    Returns (gap, minor_sum) where minor_sum is
    sum_{a<b} |x1_a x2_b - x1_b x2_a|^2, i.e. the squared-minor total of the
    two-row matrix [x1; x2].  The two agree within 1e-10 of the scale
    ||x1||^2 ||x2||^2; the gap route cancels catastrophically for
    near-parallel vectors while the minor route never does.
    """
    v1 = np.asarray(x1, dtype=np.complex128).reshape(-1)
    v2 = np.asarray(x2, dtype=np.complex128).reshape(-1)
    gap = schwarz_gap(v1, v2)
    pair = np.vstack([v1, v2])
    minor_sum = math.fsum(
        v.real * v.real + v.imag * v.imag for _, _, _, _, v in _minor_values(pair)
    )
    return gap, minor_sum


def matricize(state: PureState, cut: Cut) -> Matricization:
    """Unfold a state along a cut: subsystem ``cut`` on rows, rest on columns.

    Columns keep the remaining subsystems in ascending subsystem order,
    row-major, so entry (r, c) equals the amplitude with i_cut = r and the
    remainder multi-index column_multi_index(c).
    """
    m = state.subsystem_count
    if not 1 <= cut <= m:
        raise IndexError(f"cut {cut} out of range 1..{m}")
    j = cut - 1
    axes = [j] + [a for a in range(m) if a != j]
    entries = (
        state.amps.reshape(state.dims).transpose(axes).reshape(state.dims[j], -1)
    )
    entries = np.ascontiguousarray(entries)
    entries.flags.writeable = False
    rest = tuple(d for a, d in enumerate(state.dims) if a != j)
    return Matricization(cut=cut, row_dim=state.dims[j], remainder_dims=rest, entries=entries)


def _minor_values(entries: np.ndarray) -> Iterator[tuple[int, int, int, int, complex]]:
    """Yield (a, b, c, d, value) for all row pairs a<b and column pairs c<d.

    Indices are 0-based here; order is lexicographic in (a, b, c, d).  Rows
    are converted to tuples of Python complex up front: scalar complex
    arithmetic in the inner loop is both faster than numpy item access and
    bit-deterministic.
    """
    nr, nc = entries.shape
    if nr < 2 or nc < 2:
        return
    rows = [tuple(complex(z) for z in row) for row in entries]
    for a in range(nr - 1):
        ra = rows[a]
        for b in range(a + 1, nr):
            rb = rows[b]
            for c in range(nc - 1):
                rac = ra[c]
                rbc = rb[c]
                for d in range(c + 1, nc):
                    yield a, b, c, d, rac * rb[d] - ra[d] * rbc


def _as_entries(mat) -> np.ndarray:
    entries = mat.entries if isinstance(mat, Matricization) else np.asarray(mat)
    entries = np.asarray(entries, dtype=np.complex128)
    if entries.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got shape {entries.shape}")
    return entries


def enumerate_minors(mat) -> Iterator[MinorTerm]:
    """Stream all C(rows,2) * C(cols,2) second-order minors.

    Accepts a Matricization or any 2-D complex array.  Terms come in
    deterministic lexicographic (row_pair, col_pair) order; the stream is
    empty when rows < 2 or cols < 2.
    """
    for a, b, c, d, value in _minor_values(_as_entries(mat)):
        yield MinorTerm(row_pair=(a + 1, b + 1), col_pair=(c + 1, d + 1), value=value)


def minor_count(mat) -> int:
    """Number of terms enumerate_minors will yield."""
    nr, nc = _as_entries(mat).shape
    return (nr * (nr - 1) // 2) * (nc * (nc - 1) // 2)


def minor_sum_sq(mat) -> float:
    """Sum of squared moduli of all second-order minors.

    Accumulated with exactly rounded compensated summation in enumeration
    order, so the result is bit-reproducible.
    """
    return math.fsum(
        v.real * v.real + v.imag * v.imag
        for _, _, _, _, v in _minor_values(_as_entries(mat))
    )


def max_abs_minor(mat) -> float:
    """Largest |minor| over the stream; 0.0 for degenerate shapes."""
    best = 0.0
    for _, _, _, _, v in _minor_values(_as_entries(mat)):
        mag = abs(v)
        if mag > best:
            best = mag
    return best
