"""Irreducible constituents of ``I^alpha(sigma)`` as K-type lattice regions.

At a reducible point the K-types split into finitely many regions, each cut
out by at most two barrier "chains" of the form

    2*lam_a >= value >= 2*lam_b        (a < b, value an even integer),

i.e. a lower bound on coordinate ``a`` and an upper bound on coordinate ``b``
of the even lattice ``2*lam``.  Regions are labeled ``R(i,j)`` in Cases 1a/1b
and ``L(i,j)`` in Cases 2a/2b.  Out-of-range coordinate indices follow the
extended conventions ``2*lam_c = +inf`` for ``c <= 0`` and ``-inf`` for
``c > n``, which make the index formulas below total.

The decomposition theorems restrict the label grid to a window of levels
(index sum ``i+j`` for family R, index difference for family L) bounded by
``r1``/``r2``; ``enumerate_constituents`` applies that window and drops the
labels whose regions are empty.  Emptiness is decided exactly: a region is a
coordinate box intersected with the dominance cone, so greedily assigning
each coordinate the largest even value allowed by its upper bound and its
predecessor is a feasibility witness iff one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .parameters import CaseTag, InducedRepParams, classify, derived
from .ktypes import KType, check_ktype

__all__ = [
    "ConstituentLabel",
    "ConstituentSet",
    "Region",
    "enumerate_constituents",
    "is_empty",
    "label_of",
    "parse_label",
    "region_for",
    "sign_branch",
]

_INF = "+inf"
_NEG_INF = "-inf"


@dataclass(frozen=True, order=True)
class ConstituentLabel:
    family: str  # "R" (Cases 1) or "L" (Cases 2)
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.family not in ("R", "L"):
            raise ValueError(f"family must be 'R' or 'L', got {self.family!r}")
        if self.i < 0 or self.j < 0:
            raise ValueError(f"label indices must be >= 0, got ({self.i},{self.j})")

    def __str__(self) -> str:
        return f"{self.family}({self.i},{self.j})"


def parse_label(text: str) -> ConstituentLabel:
    """Parse ``"R(1,0)"`` / ``"L(0,2)"`` back into a label."""
    s = text.strip()
    if len(s) >= 4 and s[0] in "RL" and s[1] == "(" and s.endswith(")"):
        body = s[2:-1].split(",")
        if len(body) == 2:
            try:
                return ConstituentLabel(s[0], int(body[0]), int(body[1]))
            except ValueError:
                pass
    raise ValueError(f"not a constituent label like R(1,0): {text!r}")


@dataclass(frozen=True)
class Region:
    """Per-coordinate bounds on ``2*lam``, intersected with the dominance cone.

    ``lower[c-1]``/``upper[c-1]`` bound coordinate c (even integers or None
    for unbounded).  ``feasible=False`` marks regions whose defining chain was
    contradictory already at the extended-index level.
    """

    n: int
    lower: tuple[int | None, ...]
    upper: tuple[int | None, ...]
    feasible: bool = True

    def contains(self, lam: KType) -> bool:
        lam = check_ktype(lam)
        if len(lam) != self.n:
            raise ValueError(f"K-type has length {len(lam)}, region has n={self.n}")
        if not self.feasible:
            return False
        for x, lo, hi in zip(lam, self.lower, self.upper):
            if lo is not None and 2 * x < lo:
                return False
            if hi is not None and 2 * x > hi:
                return False
        return True

    def _cap(self) -> int:
        finite = [abs(b) for b in self.lower + self.upper if b is not None]
        m = max(finite, default=0) + 2 * self.n + 4
        return m + (m % 2)

    def _extremes(self, cap: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        # Greedy largest point (top-down) and smallest point (bottom-up); each
        # exists iff the region meets the dominance cone at all.
        prev = cap
        top = []
        for lo, hi in zip(self.lower, self.upper):
            x = min(hi if hi is not None else cap, prev)
            if lo is not None and x < lo:
                return None
            top.append(x)
            prev = x
        nxt = -cap
        bot_rev = []
        for lo, hi in zip(reversed(self.lower), reversed(self.upper)):
            x = max(lo if lo is not None else -cap, nxt)
            if hi is not None and x > hi:
                return None
            bot_rev.append(x)
            nxt = x
        return tuple(b // 2 for b in reversed(bot_rev)), tuple(t // 2 for t in top)

    def is_empty(self) -> bool:
        """True iff no dominant integer point satisfies the bounds."""
        if not self.feasible:
            return True
        return self._extremes(self._cap()) is None

    def single_point(self) -> KType | None:
        """The unique member K-type, if the region is a single lattice point."""
        if not self.feasible:
            return None
        cap = self._cap()
        ext = self._extremes(cap)
        if ext is None or ext[0] != ext[1]:
            return None
        again = self._extremes(cap + 8)
        if again != ext:
            return None
        return ext[0]

    def describe(self) -> str:
        """Human-readable membership condition in lambda units."""
        if not self.feasible or self.is_empty():
            return "{empty}"
        point = self.single_point()
        if point is not None:
            return "{lambda=(" + ",".join(str(x) for x in point) + ")}"
        parts = []
        for c, (lo, hi) in enumerate(zip(self.lower, self.upper), start=1):
            if lo is not None and hi is not None:
                if lo == hi:
                    parts.append(f"lambda_{c} = {lo // 2}")
                else:
                    parts.append(f"{lo // 2} <= lambda_{c} <= {hi // 2}")
            elif lo is not None:
                parts.append(f"lambda_{c} >= {lo // 2}")
            elif hi is not None:
                parts.append(f"lambda_{c} <= {hi // 2}")
        if not parts:
            return "{all K-types}"
        return "{" + ", ".join(parts) + "}"

    def to_json(self) -> list[dict]:
        out = []
        for c, (lo, hi) in enumerate(zip(self.lower, self.upper), start=1):
            out.append(
                {
                    "coord": c,
                    "lo": _NEG_INF if lo is None else lo,
                    "hi": _INF if hi is None else hi,
                }
            )
        return out

    @classmethod
    def from_json(cls, data: list[dict], feasible: bool = True) -> "Region":
        lower = []
        upper = []
        for entry in sorted(data, key=lambda e: e["coord"]):
            lower.append(None if entry["lo"] == _NEG_INF else int(entry["lo"]))
            upper.append(None if entry["hi"] == _INF else int(entry["hi"]))
        return cls(n=len(lower), lower=tuple(lower), upper=tuple(upper), feasible=feasible)


@dataclass(frozen=True)
class ConstituentSet:
    """The nonempty constituents at a reducible point, in lexicographic order."""

    case: CaseTag
    labels: tuple[ConstituentLabel, ...]
    index_bound: tuple[str, int] | None  # ("r1"|"r2", value), None on the unitary axis


def sign_branch(params: InducedRepParams) -> str:
    """Which sign branch of the case theorems applies: "neg", "zero" or "pos".

    Cases 1 have integer sigma (branches sigma <= -1, sigma == 0, sigma >= 1);
    Cases 2 have half-integer sigma (branches sigma <= -1/2, sigma >= 1/2).
    """
    case = _reducible_case(params)
    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        if params.sigma <= -1:
            return "neg"
        if params.sigma == 0:
            return "zero"
        return "pos"
    return "neg" if params.sigma < 0 else "pos"


def _reducible_case(params: InducedRepParams) -> CaseTag:
    case = classify(params)
    if case is CaseTag.IRREDUCIBLE:
        raise ValueError(
            "constituents are defined only at reducible points (sigma_tilde must be an integer)"
        )
    return case


def _label_definable(params: InducedRepParams, label: ConstituentLabel) -> bool:
    case = _reducible_case(params)
    d = derived(params)
    if label.family != case.family:
        return False
    if label.family == "R":
        return 0 <= label.i + label.j <= d.k
    return 0 <= label.i <= (d.n1 + 1) // 2 and 0 <= label.j <= d.n0 // 2


def _chains(params: InducedRepParams, label: ConstituentLabel) -> list[tuple[int, int, int]]:
    """The two defining chains (lo_coord, even value, hi_coord) of a region."""
    case = _reducible_case(params)
    d = derived(params)
    st = int(d.sigma_tilde)
    n0, n1 = d.n0, d.n1
    i, j = label.i, label.j

    def bp(idx: int) -> int:
        return -st + idx - 1

    def bm(idx: int) -> int:
        return st - (params.n + params.alpha) + idx

    branch = sign_branch(params)
    if case is CaseTag.CASE_1A:
        if branch == "neg":
            return [
                (2 * i, bp(2 * i + 2), 2 * i + 2),
                (n0 - 2 * j, bm(n0 - 2 * j), n0 - 2 * j + 2),
            ]
        return [
            (2 * i, bm(2 * i), 2 * i + 2),
            (n0 - 2 * j, bp(n0 - 2 * j + 2), n0 - 2 * j + 2),
        ]
    if case is CaseTag.CASE_1B:
        if branch == "neg":
            return [
                (2 * i - 1, bp(2 * i + 1), 2 * i + 1),
                (n1 - 2 * j, bm(n1 - 2 * j), n1 - 2 * j + 2),
            ]
        return [
            (2 * i - 1, bm(2 * i - 1), 2 * i + 1),
            (n1 - 2 * j, bp(n1 - 2 * j + 2), n1 - 2 * j + 2),
        ]
    if case is CaseTag.CASE_2A:
        return [
            (2 * i - 1, bm(2 * i - 1), 2 * i + 1),
            (2 * j, bp(2 * j + 2), 2 * j + 2),
        ]
    return [
        (2 * i - 1, bp(2 * i + 1), 2 * i + 1),
        (2 * j, bm(2 * j), 2 * j + 2),
    ]


def region_for(params: InducedRepParams, label: ConstituentLabel) -> Region:
    """The lattice region of a constituent label.

    Defined for every label of the case's full index grid (0 <= i+j <= k for
    family R, the rectangle S(n) for family L); labels outside the grid raise
    ValueError.  The resulting region may be empty.
    """
    if not _label_definable(params, label):
        raise ValueError(f"label undefined here: {label} at {params} ({classify(params).value})")
    n = params.n
    lower: list[int | None] = [None] * n
    upper: list[int | None] = [None] * n
    feasible = True
    for lo_coord, value, hi_coord in _chains(params, label):
        assert value % 2 == 0, "region chains must sit on even barrier positions"
        if lo_coord >= 1:
            if lo_coord <= n:
                cur = lower[lo_coord - 1]
                lower[lo_coord - 1] = value if cur is None else max(cur, value)
            else:
                feasible = False  # -inf >= value can never hold
        if hi_coord <= n:
            if hi_coord >= 1:
                cur = upper[hi_coord - 1]
                upper[hi_coord - 1] = value if cur is None else min(cur, value)
            else:
                feasible = False  # +inf <= value can never hold
    return Region(n=n, lower=tuple(lower), upper=tuple(upper), feasible=feasible)


def is_empty(params: InducedRepParams, label: ConstituentLabel) -> bool:
    """True iff the label's region contains no dominant lattice point."""
    return region_for(params, label).is_empty()


def _theorem_range(params: InducedRepParams) -> tuple[list[ConstituentLabel], tuple[str, int] | None]:
    """Label window of the decomposition theorem for the case and sign of sigma."""
    case = _reducible_case(params)
    d = derived(params)
    sigma = params.sigma
    branch = sign_branch(params)
    labels: list[ConstituentLabel] = []
    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        k = d.k
        if branch == "neg":
            r = ("r1", max(k + int(sigma), 0))
            lo_lvl, hi_lvl = r[1], k
        elif branch == "zero":
            r = None
            lo_lvl, hi_lvl = k, k
        else:
            r = ("r2", max(k - int(sigma), 0))
            lo_lvl, hi_lvl = r[1], k
        for i in range(0, hi_lvl + 1):
            for j in range(0, hi_lvl - i + 1):
                if lo_lvl <= i + j <= hi_lvl:
                    labels.append(ConstituentLabel("R", i, j))
        return sorted(labels), r

    i_max = (d.n1 + 1) // 2
    j_max = d.n0 // 2
    half = Fraction(1, 2)
    if case is CaseTag.CASE_2A:
        if branch == "pos":
            r = ("r1", int(min(sigma - half, params.n // 2)))
            keep = lambda i, j: -1 <= j - i <= r[1]
        else:
            r = ("r2", int(min(-sigma + half, (params.n + 1) // 2)))
            keep = lambda i, j: 0 <= i - j <= r[1]
    else:
        if branch == "pos":
            r = ("r2", int(min(sigma + half, (params.n + 1) // 2)))
            keep = lambda i, j: 0 <= i - j <= r[1]
        else:
            r = ("r1", int(min(-sigma - half, params.n // 2)))
            keep = lambda i, j: -1 <= j - i <= r[1]
    for i in range(0, i_max + 1):
        for j in range(0, j_max + 1):
            if keep(i, j):
                labels.append(ConstituentLabel("L", i, j))
    return sorted(labels), r


def enumerate_constituents(params: InducedRepParams) -> ConstituentSet:
    """All nonempty constituents at a reducible point, lexicographically ordered."""
    labels, bound = _theorem_range(params)
    kept = tuple(lab for lab in labels if not is_empty(params, lab))
    return ConstituentSet(case=classify(params), labels=kept, index_bound=bound)


def label_of(params: InducedRepParams, lam: KType) -> ConstituentLabel:
    """The unique constituent whose region contains the K-type at ``lam``."""
    lam = check_ktype(lam)
    if len(lam) != params.n:
        raise ValueError(f"K-type has length {len(lam)}, expected n={params.n}")
    hits = [
        lab
        for lab in enumerate_constituents(params).labels
        if region_for(params, lab).contains(lam)
    ]
    if len(hits) != 1:
        raise RuntimeError(
            f"constituent partition violated at lambda={lam} for {params}: hits={hits}"
        )
    return hits[0]
