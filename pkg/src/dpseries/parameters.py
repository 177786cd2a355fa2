"""Exact parameters for the degenerate principal series of the metaplectic group.

A representation ``I^alpha(sigma)`` of the rank-``n`` metaplectic group is
indexed by an integer rank ``n >= 2``, a character exponent
``alpha in {0, 1, 2, 3}`` and a rational parameter ``sigma``.  Everything
downstream (reducibility, constituents, module diagrams, unitarity) is
controlled by the shifted parameter

    ``sigma_tilde = sigma + (n + 1 + alpha)/2``

together with the parity of ``n + alpha``:

* ``sigma_tilde`` not an integer: the module is irreducible;
* otherwise the pair (parity of ``sigma_tilde``, parity of ``n + alpha``)
  selects one of four structural cases, named Case 1a/1b/2a/2b.

All arithmetic is exact; ``sigma`` is kept as a ``fractions.Fraction`` and no
floats appear anywhere in the core.  Callers model a "generic" sigma by any
rational whose ``sigma_tilde`` is not an integer.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "CaseTag",
    "DerivedConstants",
    "InducedRepParams",
    "classify",
    "derived",
    "format_rational",
    "is_integer",
    "parse_rational",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational written as ``"a"`` or ``"a/b"`` (e.g. ``"-3/2"``)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational of the form a or a/b: {text!r}")
    if "/" in s and s.split("/")[1].lstrip("+-") == "0":
        raise ValueError(f"zero denominator in rational: {text!r}")
    return Fraction(s)


def format_rational(value: Fraction | int) -> str:
    """Format a rational in the same ``"a"`` / ``"a/b"`` syntax accepted by parse."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


class CaseTag(enum.Enum):
    """Reducibility case of ``I^alpha(sigma)``.

    Rows by parity of ``sigma_tilde`` (odd -> a, even -> b), columns by parity
    of ``n + alpha`` (odd -> 1, even -> 2).
    """

    IRREDUCIBLE = "Irreducible"
    CASE_1A = "Case1a"
    CASE_1B = "Case1b"
    CASE_2A = "Case2a"
    CASE_2B = "Case2b"

    @property
    def family(self) -> str | None:
        """Constituent family letter: "R" in Cases 1, "L" in Cases 2."""
        if self in (CaseTag.CASE_1A, CaseTag.CASE_1B):
            return "R"
        if self in (CaseTag.CASE_2A, CaseTag.CASE_2B):
            return "L"
        return None


@dataclass(frozen=True)
class InducedRepParams:
    """The parameter triple (n, alpha, sigma) of ``I^alpha(sigma)``.

    ``sigma`` may be given as a ``Fraction``, an ``int``, or a string in
    ``"a"``/``"a/b"`` syntax; it is normalized to a ``Fraction``.  Instances
    are immutable and hashable.
    """

    n: int
    alpha: int
    sigma: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(
                f"rank below supported range: n must be an integer >= 2, got {self.n!r}"
            )
        if self.alpha not in (0, 1, 2, 3):
            raise ValueError(f"alpha must be one of 0, 1, 2, 3, got {self.alpha!r}")
        sigma = self.sigma
        if isinstance(sigma, str):
            sigma = parse_rational(sigma)
        elif isinstance(sigma, int):
            sigma = Fraction(sigma)
        elif not isinstance(sigma, Fraction):
            raise ValueError(f"sigma must be rational, got {sigma!r}")
        object.__setattr__(self, "sigma", sigma)

    @property
    def rho(self) -> Fraction:
        """Half sum of positive roots along the relevant torus: (n+1)/2."""
        return Fraction(self.n + 1, 2)

    @property
    def sigma_tilde(self) -> Fraction:
        return self.sigma + Fraction(self.n + 1 + self.alpha, 2)

    def __str__(self) -> str:
        return f"I^{self.alpha}({format_rational(self.sigma)})"


@dataclass(frozen=True)
class DerivedConstants:
    """Constants derived from the parameter triple.

    ``n0``/``n1`` are the largest even/odd integers <= n.  The index bound
    ``k`` (size of the constituent grid) is defined only at reducible points:
    ``n0/2`` when ``sigma_tilde`` is odd, ``(n1+1)/2`` when it is even.
    """

    rho: Fraction
    sigma_tilde: Fraction
    n0: int
    n1: int

    @property
    def k(self) -> int:
        if not is_integer(self.sigma_tilde):
            raise ValueError("k undefined at irreducible point (sigma_tilde is not an integer)")
        if int(self.sigma_tilde) % 2 != 0:
            return self.n0 // 2
        return (self.n1 + 1) // 2


def derived(params: InducedRepParams) -> DerivedConstants:
    """Compute the derived constants of the parameter triple."""
    n = params.n
    n0 = n if n % 2 == 0 else n - 1
    n1 = n if n % 2 == 1 else n - 1
    return DerivedConstants(
        rho=params.rho,
        sigma_tilde=params.sigma_tilde,
        n0=n0,
        n1=n1,
    )


def classify(params: InducedRepParams) -> CaseTag:
    """Classify the parameter point into Irreducible or one of the four cases."""
    st = params.sigma_tilde
    if not is_integer(st):
        return CaseTag.IRREDUCIBLE
    row_a = int(st) % 2 != 0
    col_1 = (params.n + params.alpha) % 2 != 0
    if col_1:
        return CaseTag.CASE_1A if row_a else CaseTag.CASE_1B
    return CaseTag.CASE_2A if row_a else CaseTag.CASE_2B
