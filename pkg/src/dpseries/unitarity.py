"""Unitarizability: complementary series and per-constituent verdicts.

The full module ``I^alpha(sigma)`` carries an invariant inner product iff the
step ratio

    n_ratio(lam, j) = (-sigma - xi) / (-sigma + xi),
    xi = (n+1)/2 + alpha/2 + 2*lam_j - j + 1

is negative for every K-type and coordinate; for real sigma this reads
``|sigma| < |xi|``.  The minimum of ``|xi|`` over the lattice is 1/2 when
``n + alpha`` is even and 0 otherwise, which gives the complementary series
interval ``|sigma| < 1/2`` in the even-parity case.

Unitarizability of an individual constituent is decided by the explicit
clauses of the case theorems (one clause set per case and sign of sigma);
the verdict records exactly which clause applied.  The ``region_sign_probe``
helper is an advisory-only diagnostic, not an independent proof.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .parameters import CaseTag, InducedRepParams, derived
from .ktypes import KType, check_ktype
from .constituents import (
    ConstituentLabel,
    enumerate_constituents,
    region_for,
    sign_branch,
)

__all__ = [
    "UnitarityVerdict",
    "complementary_series",
    "constituent_unitarizable",
    "n_ratio",
    "nonunitarity_witness",
    "region_sign_probe",
    "xi",
]

_HALF = Fraction(1, 2)


def xi(params: InducedRepParams, lam: KType, j: int) -> Fraction:
    lam = check_ktype(lam)
    if not 1 <= j <= params.n:
        raise ValueError(f"coordinate out of range: j={j} for n={params.n}")
    return params.rho + Fraction(params.alpha, 2) + 2 * lam[j - 1] - j + 1


def n_ratio(params: InducedRepParams, lam: KType, j: int) -> Fraction:
    """Ratio -c_lam / c_(lam + e_j) of invariant-form constants.

    Negative for all (lam, j) iff the full module is unitarizable.  Raises
    ValueError when the denominator vanishes (the form degenerates there).
    """
    x = xi(params, lam, j)
    denominator = -params.sigma + x
    if denominator == 0:
        raise ValueError(f"form degenerates at this K-type: lambda={lam}, j={j}")
    return (-params.sigma - x) / denominator


def complementary_series(params: InducedRepParams) -> bool:
    """Whether the full module is unitarizable on the real axis.

    True on the unitary axis sigma = 0 and, when ``n + alpha`` is even, on the
    open interval |sigma| < 1/2.
    """
    if params.sigma == 0:
        return True
    return (params.n + params.alpha) % 2 == 0 and abs(params.sigma) < _HALF


def nonunitarity_witness(
    params: InducedRepParams, radius: int = 6
) -> tuple[KType, int] | None:
    """A (lambda, j) in the window with n_ratio >= 0 or a degenerate form.

    Returns None when every probe point has negative ratio.  Witnesses exist
    whenever ``complementary_series`` is False and |sigma| >= the minimal |xi|.
    """
    n = params.n
    values = range(radius, -radius - 1, -1)
    for lam in itertools.combinations_with_replacement(values, n):
        for j in range(1, n + 1):
            x = xi(params, lam, j)
            if -params.sigma + x == 0:
                return lam, j
            if n_ratio(params, lam, j) >= 0:
                return lam, j
    return None


@dataclass(frozen=True)
class UnitarityVerdict:
    unitarizable: bool
    reason: str  # names the exact clause that decided the verdict


def constituent_unitarizable(
    params: InducedRepParams, label: ConstituentLabel
) -> UnitarityVerdict:
    """Unitarizability of one constituent, per the case theorems' clauses."""
    cs = enumerate_constituents(params)
    if label not in cs.labels:
        raise ValueError(f"label is not a nonempty constituent here: {label} at {params}")
    case = cs.case
    branch = sign_branch(params)
    sigma = params.sigma
    d = derived(params)
    i, j = label.i, label.j
    k0 = params.n // 2  # largest i with an i<->i barrier pair in family L
    k1 = (params.n + 1) // 2

    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        k = d.k
        if branch == "zero":
            return UnitarityVerdict(True, f"{case.value}-sigma=0-direct-sum")
        exceptional = (
            case is CaseTag.CASE_1B
            and params.n % 2 == 1
            and params.alpha in (0, 2)
            and (i, j) in (((params.n + 1) // 2, 0), (0, (params.n + 1) // 2))
        )
        if branch == "neg":
            r1 = max(k + int(sigma), 0)
            if -k <= sigma <= -1 and i + j == r1:
                return UnitarityVerdict(True, f"{case.value}-sigma<=-1-(i+j=r1)")
            if exceptional:
                return UnitarityVerdict(True, "Case1b-exceptional-(n odd, alpha in {0,2})")
            return UnitarityVerdict(
                False, f"{case.value}-sigma<=-1: needs -{k}<=sigma<=-1 and i+j=r1={r1}"
            )
        r2 = max(k - int(sigma), 0)
        if 1 <= sigma <= k and i + j == r2:
            return UnitarityVerdict(True, f"{case.value}-sigma>=1-(i+j=r2)")
        if exceptional:
            return UnitarityVerdict(True, "Case1b-exceptional-(n odd, alpha in {0,2})")
        return UnitarityVerdict(
            False, f"{case.value}-sigma>=1: needs 1<=sigma<={k} and i+j=r2={r2}"
        )

    if case is CaseTag.CASE_2A:
        if branch == "pos":
            if i == j + 1:
                return UnitarityVerdict(True, "Case2a-sigma>=1/2-(i=j+1)")
            r1 = int(min(sigma - _HALF, k0))
            if _HALF <= sigma <= k0 + _HALF and j - i == r1:
                return UnitarityVerdict(True, "Case2a-sigma>=1/2-(j-i=r1)")
            return UnitarityVerdict(
                False, f"Case2a-sigma>=1/2: needs i=j+1, or sigma<={k0}+1/2 and j-i=r1={r1}"
            )
        if i == j:
            return UnitarityVerdict(True, "Case2a-sigma<=-1/2-(i=j)")
        r2 = int(min(-sigma + _HALF, k1))
        if -k1 + _HALF <= sigma <= -_HALF and i - j == r2:
            return UnitarityVerdict(True, "Case2a-sigma<=-1/2-(i-j=r2)")
        return UnitarityVerdict(
            False, f"Case2a-sigma<=-1/2: needs i=j, or sigma>=-{k1}+1/2 and i-j=r2={r2}"
        )

    if branch == "pos":
        if i == j:
            return UnitarityVerdict(True, "Case2b-sigma>=1/2-(i=j)")
        r2 = int(min(sigma + _HALF, k1))
        if _HALF <= sigma <= k1 - _HALF and i - j == r2:
            return UnitarityVerdict(True, "Case2b-sigma>=1/2-(i-j=r2)")
        return UnitarityVerdict(
            False, f"Case2b-sigma>=1/2: needs i=j, or sigma<={k1}-1/2 and i-j=r2={r2}"
        )
    if i == j + 1:
        return UnitarityVerdict(True, "Case2b-sigma<=-1/2-(i=j+1)")
    r1 = int(min(-sigma - _HALF, k0))
    if -k0 - _HALF <= sigma <= -_HALF and j - i == r1:
        return UnitarityVerdict(True, "Case2b-sigma<=-1/2-(j-i=r1)")
    return UnitarityVerdict(
        False, f"Case2b-sigma<=-1/2: needs i=j+1, or sigma>=-{k0}-1/2 and j-i=r1={r1}"
    )


def region_sign_probe(
    params: InducedRepParams, label: ConstituentLabel, radius: int = 6
) -> dict:
    """Advisory diagnostic: sign of n_ratio along steps inside one region.

    Checks every up-step lam -> lam + e_j whose endpoints both lie in the
    label's region, within the given window.  All-negative ratios are
    consistent with (but do not prove) a positive invariant form on the
    constituent; this is NOT authoritative, the theorem clauses are.
    """
    region = region_for(params, label)
    n = params.n
    values = range(radius, -radius - 1, -1)
    violations = []
    steps = 0
    for lam in itertools.combinations_with_replacement(values, n):
        if not region.contains(lam):
            continue
        for j in range(1, n + 1):
            moved = lam[: j - 1] + (lam[j - 1] + 1,) + lam[j:]
            if any(moved[a] < moved[a + 1] for a in range(n - 1)):
                continue
            if not region.contains(moved):
                continue
            steps += 1
            x = xi(params, lam, j)
            if -params.sigma + x == 0 or n_ratio(params, lam, j) >= 0:
                violations.append({"lambda": lam, "j": j})
    return {
        "advisory": "advisory sign probe only; not an authoritative unitarity test",
        "steps_checked": steps,
        "all_negative": not violations,
        "violations": violations[:5],
    }
