"""Theta-lift images inside the degenerate principal series.

An orthogonal signature (p, q) determines a target module via

    sigma = (p + q)/2 - (n + 1)/2,    alpha = p - q  (mod 4),

and the coinvariant space Omega^{p,q} embeds there.  Its image is a single
constituent when sigma is on the negative side (sigma <= 0 in Cases 1,
sigma <= -1/2 in Cases 2) and the submodule generated by an explicit
constituent when sigma is on the positive side.  A "possible embedding" at a
parameter point is any signature satisfying the two conditions above;
``check_summary`` verifies, point by point, the global picture these images
paint: they enumerate the irreducible submodules for -rho <= sigma < 0, they
decompose the unitary axis, and for sigma > 0 they account for reducibility
and reach every irreducible quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .parameters import CaseTag, InducedRepParams, classify, is_integer
from .constituents import ConstituentLabel
from .structure import (
    generated_submodule,
    irreducible_quotients,
    irreducible_submodules,
    module_diagram,
)
from .unitarity import constituent_unitarizable

__all__ = [
    "ClauseCheck",
    "OmegaImage",
    "SummaryReport",
    "check_summary",
    "induced_params",
    "omega_image",
    "possible_embeddings",
]


def _epsilon(m: int) -> int:
    """1 for even total m, 0 for odd (Case 1a index offset)."""
    return 1 if m % 2 == 0 else 0


def _epsilon_prime(m: int) -> int:
    """0 for even total m, 1 for odd (Case 1b index offset)."""
    return 0 if m % 2 == 0 else 1


def induced_params(p: int, q: int, n: int) -> InducedRepParams:
    """Target parameters of the embedding attached to the signature (p, q)."""
    if p < 0 or q < 0:
        raise ValueError(f"signature entries must be >= 0, got (p,q)=({p},{q})")
    sigma = Fraction(p + q, 2) - Fraction(n + 1, 2)
    return InducedRepParams(n=n, alpha=(p - q) % 4, sigma=sigma)


def possible_embeddings(params: InducedRepParams) -> tuple[tuple[int, int], ...]:
    """All signatures (p, q) with p+q = 2*sigma + n + 1 and p-q = alpha mod 4."""
    total = 2 * params.sigma + params.n + 1
    if not is_integer(total) or total < 0:
        return ()
    m = int(total)
    return tuple(
        (p, m - p) for p in range(m + 1) if (p - (m - p) - params.alpha) % 4 == 0
    )


@dataclass(frozen=True)
class OmegaImage:
    """The image of one coinvariant space inside its target module.

    ``shape`` is "single" (the image is the constituent ``generator``) or
    "generated" (the image is the submodule generated by ``generator``);
    ``members`` lists the constituents of the image either way.  This is a
    K-type-level identification only.
    """

    p: int
    q: int
    target: InducedRepParams
    shape: str
    generator: ConstituentLabel
    members: tuple[ConstituentLabel, ...]


def omega_image(p: int, q: int, n: int) -> OmegaImage:
    """Identify Omega^{p,q} inside its target module."""
    target = induced_params(p, q, n)
    case = classify(target)
    assert case is not CaseTag.IRREDUCIBLE, "embedding targets are always reducible"
    sigma = target.sigma
    m = p + q

    if case is CaseTag.CASE_1A:
        assert p % 2 == 1, "Case 1a embeddings have odd p"
        if sigma <= 0:
            idx = ((p - 1) // 2, (q - _epsilon(m)) // 2)
            shape = "single"
        else:
            idx = (max(0, (n - q) // 2), max(0, (n + 1 - _epsilon(m) - p) // 2))
            shape = "generated"
        label = ConstituentLabel("R", *idx)
    elif case is CaseTag.CASE_1B:
        assert p % 2 == 0, "Case 1b embeddings have even p"
        if sigma <= 0:
            idx = (p // 2, (q - _epsilon_prime(m)) // 2)
            shape = "single"
        else:
            idx = (max(0, (n + 1 - q) // 2), max(0, (n + 1 - _epsilon_prime(m) - p) // 2))
            shape = "generated"
        label = ConstituentLabel("R", *idx)
    elif case is CaseTag.CASE_2A:
        assert p % 2 == 1, "Case 2a embeddings have odd p"
        if sigma < 0:
            idx = ((n + 1 - q) // 2, (p - 1) // 2)
            shape = "single"
        else:
            idx = (max(0, (n + 1 - q) // 2), min(n // 2, (p - 1) // 2))
            shape = "generated"
        label = ConstituentLabel("L", *idx)
    else:
        assert p % 2 == 0, "Case 2b embeddings have even p"
        if sigma < 0:
            idx = (p // 2, (n - q) // 2)
            shape = "single"
        else:
            idx = (min((n + 1) // 2, p // 2), max(0, (n - q) // 2))
            shape = "generated"
        label = ConstituentLabel("L", *idx)

    if shape == "single":
        members: tuple[ConstituentLabel, ...] = (label,)
    else:
        members = generated_submodule(target, label).members
    return OmegaImage(p=p, q=q, target=target, shape=shape, generator=label, members=members)


@dataclass(frozen=True)
class ClauseCheck:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class SummaryReport:
    params: InducedRepParams
    regime: str  # "negative", "axis", or "positive"
    checks: tuple[ClauseCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _fmt_labels(labels) -> str:
    return "{" + ", ".join(str(x) for x in sorted(labels)) + "}"


def check_summary(params: InducedRepParams) -> SummaryReport:
    """Verify the embedding picture at one reducible point.

    Every clause failure is reported with a witness; nothing is silently
    passed over.
    """
    case = classify(params)
    if case is CaseTag.IRREDUCIBLE:
        raise ValueError("check_summary needs a reducible point (sigma_tilde an integer)")
    sigma = params.sigma
    embeddings = possible_embeddings(params)
    images = [omega_image(p, q, params.n) for p, q in embeddings]
    checks: list[ClauseCheck] = []

    if -params.rho <= sigma < 0:
        regime = "negative"
        sinks = set(irreducible_submodules(params))
        image_labels = [img.generator for img in images]
        distinct = len(set(image_labels)) == len(image_labels)
        checks.append(
            ClauseCheck(
                "images-distinct",
                distinct,
                f"embeddings {list(embeddings)} -> images {sorted(str(x) for x in image_labels)}",
            )
        )
        same = set(image_labels) == sinks
        checks.append(
            ClauseCheck(
                "submodules-are-embedding-images",
                same,
                f"images {_fmt_labels(image_labels)} vs irreducible submodules {_fmt_labels(sinks)}",
            )
        )
        bad = [
            str(lab)
            for lab in sorted(sinks)
            if not constituent_unitarizable(params, lab).unitarizable
        ]
        checks.append(
            ClauseCheck(
                "submodules-unitary",
                not bad,
                "all irreducible submodules unitarizable" if not bad else f"not unitarizable: {bad}",
            )
        )
    elif sigma == 0:
        regime = "axis"
        diagram = module_diagram(params)
        checks.append(
            ClauseCheck(
                "axis-direct-sum",
                not diagram.edges,
                f"{len(diagram.edges)} diagram edges",
            )
        )
        image_labels = [img.generator for img in images]
        nodes = set(diagram.nodes)
        ok = len(set(image_labels)) == len(image_labels) and set(image_labels) == nodes
        checks.append(
            ClauseCheck(
                "axis-images-exhaust",
                ok,
                f"images {_fmt_labels(image_labels)} vs constituents {_fmt_labels(nodes)}",
            )
        )
        bad = [
            str(lab)
            for lab in diagram.nodes
            if not constituent_unitarizable(params, lab).unitarizable
        ]
        checks.append(
            ClauseCheck(
                "axis-summands-unitary",
                not bad,
                "all summands unitarizable" if not bad else f"not unitarizable: {bad}",
            )
        )
    else:
        regime = "positive"
        checks.append(
            ClauseCheck(
                "reducible-iff-embeddings",
                bool(embeddings),
                f"{len(embeddings)} possible embeddings at a reducible point",
            )
        )
        tops = set(irreducible_quotients(params))
        generators = {img.generator for img in images}
        missing = sorted(str(x) for x in tops - generators)
        checks.append(
            ClauseCheck(
                "quotients-are-embedding-cosocles",
                not missing,
                "every irreducible quotient is the cosocle of some image"
                if not missing
                else f"quotients not reached by any embedding generator: {missing}",
            )
        )
    return SummaryReport(params=params, regime=regime, checks=tuple(checks))
