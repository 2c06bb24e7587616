"""Concurrence of pure bipartite/tripartite states and separability certificates.

The concurrence of a pure state is sqrt(N * S) where S collects the squared
moduli of every 2x2 minor of the state's one-vs-rest coefficient
matricizations: the single cut (subsystem 1 vs 2) for a bipartite state, all
three cuts for a tripartite one.  With the default normalization N = 4 the
squared value equals sum_j 2(1 - Tr rho_j^2) over the same cuts, so a Bell
pair scores exactly 1 and the value can be cross-checked against reduced
density matrices (see the oracle module).

A cut is separable exactly when every minor of its matricization vanishes
(Schwarz equality for all row pairs); the certificate records the largest
|minor| found against a tolerance relative to the squared peak amplitude,
and for separable cuts carries the explicit rank-1 factors.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ArityError, CertificateError
from .schwarz import Matricization, matricize, max_abs_minor, minor_sum_sq
from .states import Cut, PureState, normalize

DEFAULT_NORMALIZATION = 4.0
DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class ConcurrenceReport:
    """Concurrence value plus the per-cut minor sums behind it.

    value = sqrt(normalization * sum of the listed per-cut sums).
    """

    value: float
    per_cut_sums: tuple[tuple[Cut, float], ...]
    normalization: float


@dataclass(frozen=True, eq=False)
class SeparabilityCertificate:
    """Verdict for one cut: separable iff max|minor| <= tolerance * scale,
    where scale is the squared modulus of the largest amplitude.

    ``factors`` is populated exactly when separable: the normalized state of
    the cut subsystem and the normalized state of the remainder (remaining
    subsystems in ascending order).
    """

    cut: Cut
    max_abs_minor: float
    tolerance: float
    separable: bool
    factors: tuple[PureState, PureState] | None


@dataclass(frozen=True, eq=False)
class FullSeparabilityResult:
    """Outcome of the greedy full-separability recursion.

    ``factors`` holds (original subsystem index, single-subsystem state)
    pairs, ordered by subsystem index.  When not fully separable,
    ``remainder`` is the normalized entangled residue over the original
    subsystems listed in ``remainder_subsystems``, and ``failed`` holds one
    certificate per remainder cut (cut k refers to remainder_subsystems[k-1]).
    """

    fully_separable: bool
    factors: tuple[tuple[int, PureState], ...]
    failed: tuple[SeparabilityCertificate, ...]
    remainder: PureState | None
    remainder_subsystems: tuple[int, ...]

    @property
    def verdict(self) -> str:
        return "fully separable" if self.fully_separable else "entangled at cut structure"


def _check_normalization(normalization: float) -> float:
    normalization = float(normalization)
    if not normalization > 0.0:
        raise ValueError(f"normalization must be positive, got {normalization}")
    return normalization


def bipartite_concurrence(
    state: PureState, normalization: float = DEFAULT_NORMALIZATION
) -> ConcurrenceReport:
    """Concurrence of a pure two-part state.

    The state is normalized internally, unfolded along cut 1 into its
    N_1 x N_2 coefficient matrix, and the squared moduli of all 2x2 minors
    are summed; value = sqrt(normalization * sum).
    """
    normalization = _check_normalization(normalization)
    if state.subsystem_count != 2:
        raise ArityError(
            f"bipartite concurrence needs 2 subsystems, got {state.subsystem_count}"
        )
    s = minor_sum_sq(matricize(normalize(state), 1))
    return ConcurrenceReport(
        value=math.sqrt(normalization * s),
        per_cut_sums=((1, s),),
        normalization=normalization,
    )


def tripartite_concurrence(
    state: PureState,
    normalization: float = DEFAULT_NORMALIZATION,
    parallel: bool = False,
) -> ConcurrenceReport:
    """Concurrence of a pure three-part state.

    Sums the squared-minor totals of all three one-vs-rest matricizations;
    value = sqrt(normalization * (S_1 + S_2 + S_3)).  With parallel=True the
    three per-cut sums are evaluated concurrently; each per-cut sum is
    internally fixed-order and the three results are combined in cut order,
    so the result is bit-identical to the serial evaluation.
    """
    normalization = _check_normalization(normalization)
    if state.subsystem_count != 3:
        raise ArityError(
            f"tripartite concurrence needs 3 subsystems, got {state.subsystem_count}"
        )
    s = normalize(state)
    cuts = (1, 2, 3)
    if parallel:
        with ThreadPoolExecutor(max_workers=3) as pool:
            sums = list(pool.map(lambda j: minor_sum_sq(matricize(s, j)), cuts))
    else:
        sums = [minor_sum_sq(matricize(s, j)) for j in cuts]
    total = math.fsum(sums)
    return ConcurrenceReport(
        value=math.sqrt(normalization * total),
        per_cut_sums=tuple(zip(cuts, sums)),
        normalization=normalization,
    )


def concurrence(
    state: PureState,
    normalization: float = DEFAULT_NORMALIZATION,
    parallel: bool = False,
) -> ConcurrenceReport:
    """Dispatch to the bipartite or tripartite formula by subsystem count."""
    m = state.subsystem_count
    if m == 2:
        return bipartite_concurrence(state, normalization)
    if m == 3:
        return tripartite_concurrence(state, normalization, parallel=parallel)
    raise ArityError(f"concurrence is defined for 2 or 3 subsystems, got {m}")


def _rank_one_factors(mat: Matricization) -> tuple[PureState, PureState]:
    """Rank-1 factors of a (near-)rank-1 matricization.

    The pivot is the entry of maximum modulus (stable even when the top-left
    entry vanishes); the row factor is the pivot column, the column factor is
    the pivot row divided by the pivot.  For an exactly rank-1 matrix of a
    normalized state the outer product of the normalized factors reproduces
    the matrix without even a global phase.
    """
    entries = mat.entries
    flat_pivot = int(np.argmax(np.abs(entries)))
    r, c = divmod(flat_pivot, entries.shape[1])
    u = entries[:, c]
    v = entries[r, :] / entries[r, c]
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    return (
        PureState((mat.row_dim,), u),
        PureState(mat.remainder_dims, v),
    )


def is_separable_cut(
    state: PureState, cut: Cut, tolerance: float = DEFAULT_TOLERANCE
) -> SeparabilityCertificate:
    """Certify whether ``state`` factors across the given one-vs-rest cut.

    All 2x2 minors of the cut's matricization are scanned; the cut is
    separable iff the largest |minor| is at most tolerance * (peak |amp|)^2.
    Minors scale quadratically in the amplitudes, so the verdict does not
    depend on the input's normalization.  Factors are attached exactly when
    separable.
    """
    tolerance = float(tolerance)
    if not tolerance > 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if state.subsystem_count < 2:
        raise ArityError("separability across a cut needs at least 2 subsystems")
    mat = matricize(state, cut)
    worst = max_abs_minor(mat)
    scale = float(np.max(np.abs(state.amps))) ** 2
    separable = worst <= tolerance * scale
    factors = None
    if separable:
        factors = _rank_one_factors(matricize(normalize(state), cut))
    return SeparabilityCertificate(
        cut=cut,
        max_abs_minor=worst,
        tolerance=tolerance,
        separable=separable,
        factors=factors,
    )


def factorize_cut(
    state: PureState, cut: Cut, tolerance: float = DEFAULT_TOLERANCE
) -> tuple[PureState, PureState]:
    """Split a cut-separable state into (subsystem factor, remainder factor).

    Both factors are normalized; their tensor product (subsystem ``cut``
    first, then the remaining subsystems in ascending order) reproduces the
    normalized input with fidelity >= 1 - 1e-10.

    Raises CertificateError if the cut is not separable at the tolerance.
    """
    cert = is_separable_cut(state, cut, tolerance)
    if not cert.separable:
        raise CertificateError(
            f"cut {cut} is not separable: max |minor| = {cert.max_abs_minor:.3e} "
            f"exceeds tolerance {cert.tolerance:.3e} x scale"
        )
    assert cert.factors is not None
    return cert.factors


def full_separability(
    state: PureState, tolerance: float = DEFAULT_TOLERANCE
) -> FullSeparabilityResult:
    """Greedily peel off separable subsystems until none remains or none splits.

    Cuts of the current remainder are tested in ascending order; the first
    separable one is factored off and the remainder is re-tested from
    scratch.  The state is fully separable iff this extracts one factor per
    subsystem.  For exact product states the greedy order does not affect
    the verdict; it only fixes which certificates are reported.
    """
    current = normalize(state)
    ids = list(range(1, state.subsystem_count + 1))
    factors: list[tuple[int, PureState]] = []
    while True:
        if len(ids) == 1:
            factors.append((ids[0], current))
            return FullSeparabilityResult(
                fully_separable=True,
                factors=tuple(sorted(factors)),
                failed=(),
                remainder=None,
                remainder_subsystems=(),
            )
        certificates = []
        extracted = False
        for pos in range(1, len(ids) + 1):
            cert = is_separable_cut(current, pos, tolerance)
            if cert.separable:
                assert cert.factors is not None
                u, rest = cert.factors
                factors.append((ids[pos - 1], u))
                current = rest
                del ids[pos - 1]
                extracted = True
                break
            certificates.append(cert)
        if not extracted:
            return FullSeparabilityResult(
                fully_separable=False,
                factors=tuple(sorted(factors)),
                failed=tuple(certificates),
                remainder=current,
                remainder_subsystems=tuple(ids),
            )
