"""The K-type lattice of ``I^alpha(sigma)`` and its transition coefficients.

``I^alpha(sigma)`` restricted to the maximal compact subgroup is multiplicity
free, with one K-type for each weakly decreasing integer n-tuple ``lam``
(the K-type's highest weight is ``2*lam + (alpha/2)*(1,...,1)``).  Moving one
step in the lattice, ``lam -> lam + e_j`` or ``lam -> lam - e_j``, carries a
scalar transition coefficient

    up:   b_plus(j)  - 2*lam_j
    down: 2*lam_j    - b_minus(j)

where ``b_plus(j) = -sigma_tilde + j - 1`` and
``b_minus(j) = sigma_tilde - (n + alpha) + j``.  A nonzero coefficient means
the target K-type lies in the submodule generated by the source; a zero
coefficient is a barrier.  The barrier hyperplane ``x_j = b`` is *effective*
exactly when ``b`` is an even integer, so that it actually cuts the even
lattice ``2*lam``.

Coefficients are exact rationals; "blocked" always means exactly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .parameters import InducedRepParams, format_rational, is_integer

__all__ = [
    "Barrier",
    "barrier_minus",
    "barrier_plus",
    "barriers",
    "blocked_positions",
    "check_ktype",
    "effective_barriers",
    "format_ktype",
    "gap",
    "neighbors",
    "parse_ktype",
    "transition",
]

KType = tuple[int, ...]


def check_ktype(lam: Iterable[int]) -> KType:
    """Validate and normalize a K-type index to a weakly decreasing int tuple."""
    t = tuple(lam)
    if not t or not all(isinstance(x, int) for x in t):
        raise ValueError(f"K-type index must be a nonempty tuple of integers, got {t!r}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"K-type index must be weakly decreasing, got {t!r}")
    return t


def parse_ktype(text: str) -> KType:
    """Parse comma-separated integers like ``"1,0,-2"`` into a K-type index."""
    try:
        entries = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer tuple: {text!r}") from None
    return check_ktype(entries)


def format_ktype(lam: KType) -> str:
    return ",".join(str(x) for x in lam)


def barrier_plus(params: InducedRepParams, j: int) -> Fraction:
    """Position of the rightward barrier in coordinate j (any integer j)."""
    return -params.sigma_tilde + j - 1


def barrier_minus(params: InducedRepParams, j: int) -> Fraction:
    """Position of the leftward barrier in coordinate j (any integer j)."""
    return params.sigma_tilde - (params.n + params.alpha) + j


def gap(params: InducedRepParams) -> Fraction:
    """Signed distance barrier_plus - barrier_minus, independent of j."""
    return -2 * params.sigma - 2


def transition(params: InducedRepParams, lam: KType, j: int, direction: str) -> Fraction:
    """Transition coefficient from the K-type at ``lam`` to ``lam +- e_j``.

    ``direction`` is "up" (+e_j) or "down" (-e_j).  Raises ValueError when the
    moved tuple is not weakly decreasing ("no such K-type"), which is distinct
    from returning a zero coefficient.
    """
    lam = check_ktype(lam)
    if not 1 <= j <= params.n:
        raise ValueError(f"coordinate out of range: j={j} for n={params.n}")
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    step = 1 if direction == "up" else -1
    moved = lam[: j - 1] + (lam[j - 1] + step,) + lam[j:]
    if any(moved[i] < moved[i + 1] for i in range(len(moved) - 1)):
        raise ValueError(f"no such K-type: {moved} is not dominant")
    if direction == "up":
        return barrier_plus(params, j) - 2 * lam[j - 1]
    return 2 * lam[j - 1] - barrier_minus(params, j)


def neighbors(lam: KType) -> list[tuple[KType, int, str]]:
    """All dominant one-step moves from ``lam``, as (target, coordinate, direction).

    Ordered by coordinate, "up" before "down".
    """
    lam = check_ktype(lam)
    n = len(lam)
    out: list[tuple[KType, int, str]] = []
    for j in range(1, n + 1):
        if j == 1 or lam[j - 2] >= lam[j - 1] + 1:
            out.append((lam[: j - 1] + (lam[j - 1] + 1,) + lam[j:], j, "up"))
        if j == n or lam[j] <= lam[j - 1] - 1:
            out.append((lam[: j - 1] + (lam[j - 1] - 1,) + lam[j:], j, "down"))
    return out


@dataclass(frozen=True)
class Barrier:
    """A barrier hyperplane ``x_j = position`` in the ``2*lam`` coordinates."""

    coordinate: int
    kind: str  # "plus" blocks up-moves, "minus" blocks down-moves
    position: Fraction
    effective: bool

    def __str__(self) -> str:
        sign = "+" if self.kind == "plus" else "-"
        return f"l{sign}_{self.coordinate} at {format_rational(self.position)}"


def _is_even_integer(value: Fraction) -> bool:
    return is_integer(value) and int(value) % 2 == 0


def barriers(params: InducedRepParams) -> tuple[Barrier, ...]:
    """Both barriers for every coordinate 1..n, with effectiveness flags."""
    out = []
    for j in range(1, params.n + 1):
        for kind, pos in (("plus", barrier_plus(params, j)), ("minus", barrier_minus(params, j))):
            out.append(Barrier(j, kind, pos, _is_even_integer(pos)))
    return tuple(out)


def effective_barriers(params: InducedRepParams) -> tuple[Barrier, ...]:
    """The barriers that cut the even lattice (empty when sigma_tilde is not an integer)."""
    return tuple(b for b in barriers(params) if b.effective)


def blocked_positions(
    params: InducedRepParams,
) -> tuple[tuple[int | None, ...], tuple[int | None, ...]]:
    """Zero locus of ``transition`` per coordinate, in ``2*lam`` units.

    Returns ``(up, down)`` where ``up[j-1]`` is the even integer position at
    which the up-move in coordinate j is blocked (``transition == 0``), or
    None when no even lattice point is ever blocked.  This is exactly the set
    of pairs where ``transition(params, lam, j, ...)`` vanishes; the oracle's
    vectorized graph build consumes it.
    """
    up = []
    down = []
    for j in range(1, params.n + 1):
        bp = barrier_plus(params, j)
        bm = barrier_minus(params, j)
        up.append(int(bp) if _is_even_integer(bp) else None)
        down.append(int(bm) if _is_even_integer(bm) else None)
    return tuple(up), tuple(down)
