from fractions import Fraction

import pytest

from dpseries import (
    CaseTag,
    ConstituentLabel,
    InducedRepParams,
    check_summary,
    classify,
    enumerate_constituents,
    induced_params,
    irreducible_quotients,
    irreducible_submodules,
    omega_image,
    possible_embeddings,
    region_for,
)

from conftest import params_from_sigma_tilde


def L(i, j):
    return ConstituentLabel("L", i, j)


def R(i, j):
    return ConstituentLabel("R", i, j)


def test_induced_params_worked_points():
    assert induced_params(4, 0, 2) == InducedRepParams(2, 0, Fraction(1, 2))
    assert induced_params(0, 0, 2) == InducedRepParams(2, 0, Fraction(-3, 2))
    assert induced_params(1, 0, 2) == InducedRepParams(2, 1, Fraction(-1))
    with pytest.raises(ValueError):
        induced_params(-1, 0, 2)


def test_omega_image_worked_points():
    img = omega_image(4, 0, 2)
    assert (img.shape, img.generator, img.members) == ("generated", L(1, 1), (L(1, 1),))

    img = omega_image(0, 0, 2)
    assert (img.shape, img.generator) == ("single", L(0, 1))
    assert region_for(img.target, img.generator).single_point() == (0, 0)

    img = omega_image(1, 0, 2)
    assert (img.shape, img.generator) == ("single", R(0, 0))

    img = omega_image(2, 2, 2)
    assert (img.shape, img.generator) == ("generated", L(1, 0))
    assert img.members == (L(0, 0), L(1, 0), L(1, 1))  # the whole module


def test_possible_embeddings_worked_points():
    assert possible_embeddings(InducedRepParams(2, 0, Fraction(1, 2))) == (
        (0, 4),
        (2, 2),
        (4, 0),
    )
    assert possible_embeddings(InducedRepParams(2, 1, Fraction(0))) == ((0, 3), (2, 1))
    assert possible_embeddings(InducedRepParams(2, 0, Fraction(-3, 2))) == ((0, 0),)
    # below p+q = 0 there is nothing
    assert possible_embeddings(InducedRepParams(2, 0, Fraction(-5, 2))) == ()


def test_embedding_parity_coherence():
    # the target case is determined by (parity of n+m, parity of p), and
    # sigma_tilde has the parity of p
    for p in range(0, 7):
        for q in range(0, 7):
            for n in (2, 3, 4):
                target = induced_params(p, q, n)
                case = classify(target)
                assert case is not CaseTag.IRREDUCIBLE
                st = target.sigma_tilde
                assert int(st) % 2 == p % 2
                row_a = p % 2 == 1
                col_1 = (n + p + q) % 2 == 1
                expected = {
                    (True, True): CaseTag.CASE_1A,
                    (False, True): CaseTag.CASE_1B,
                    (True, False): CaseTag.CASE_2A,
                    (False, False): CaseTag.CASE_2B,
                }[(row_a, col_1)]
                assert case is expected


def test_single_images_sit_on_the_socle_level():
    # index-sum/difference laws for the single-constituent images
    for p in range(0, 7):
        for q in range(0, 7):
            for n in (2, 3, 4, 5):
                target = induced_params(p, q, n)
                if target.sigma > 0:
                    continue
                img = omega_image(p, q, n)
                assert img.shape == "single"
                assert img.generator in irreducible_submodules(target)


def test_single_image_index_laws():
    # single-constituent images land exactly on the socle level:
    # family R at i+j = k + sigma, Case 2a at i-j = -sigma+1/2, Case 2b at
    # j-i = -sigma-1/2
    from dpseries import derived

    for p in range(0, 8):
        for q in range(0, 8):
            for n in (2, 3, 4, 5):
                target = induced_params(p, q, n)
                if target.sigma > 0:
                    continue
                img = omega_image(p, q, n)
                i, j = img.generator.i, img.generator.j
                case = classify(target)
                if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
                    assert i + j == derived(target).k + target.sigma
                elif case is CaseTag.CASE_2A:
                    assert i - j == -target.sigma + Fraction(1, 2)
                else:
                    assert j - i == -target.sigma - Fraction(1, 2)


def test_generated_images_on_positive_side():
    for p in range(0, 8):
        for q in range(0, 8):
            for n in (2, 3):
                target = induced_params(p, q, n)
                if target.sigma <= 0:
                    continue
                img = omega_image(p, q, n)
                assert img.shape == "generated"
                assert img.generator in set(enumerate_constituents(target).labels)
                assert img.generator in img.members


def test_distinct_embeddings_distinct_images_when_negative():
    for n in (2, 3, 4, 5):
        for alpha in range(4):
            for st_val in range(-6, 7):
                params = params_from_sigma_tilde(n, alpha, st_val)
                if not params.sigma < 0:
                    continue
                pairs = possible_embeddings(params)
                generators = [omega_image(p, q, n).generator for p, q in pairs]
                assert len(set(generators)) == len(generators)


def test_check_summary_worked_points():
    rep = check_summary(InducedRepParams(2, 1, Fraction(0)))
    assert rep.regime == "axis" and rep.ok

    rep = check_summary(InducedRepParams(2, 0, Fraction(1, 2)))
    assert rep.regime == "positive" and rep.ok

    rep = check_summary(InducedRepParams(2, 1, Fraction(-1)))
    assert rep.regime == "negative" and rep.ok
    assert irreducible_submodules(InducedRepParams(2, 1, Fraction(-1))) == (R(0, 0),)


def test_check_summary_boundary_gap():
    """At sigma = -rho with alpha = 2 the total p+q must be 0, but the shifted
    parameter is odd, so (0,0) is not an admissible signature: the socle is
    not a theta-lift image there and check_summary reports the failure."""
    rep = check_summary(InducedRepParams(2, 2, Fraction(-3, 2)))
    assert rep.regime == "negative" and not rep.ok
    failed = {c.name for c in rep.checks if not c.ok}
    assert failed == {"submodules-are-embedding-images", "submodules-unitary"}


def test_check_summary_requires_reducible():
    with pytest.raises(ValueError, match="reducible"):
        check_summary(InducedRepParams(2, 0, Fraction(1, 3)))


def test_positive_side_quotients_are_cosocles():
    for n in (2, 3, 4):
        for alpha in range(4):
            for st_val in range(-6, 7):
                params = params_from_sigma_tilde(n, alpha, st_val)
                if not params.sigma > 0:
                    continue
                pairs = possible_embeddings(params)
                assert pairs
                generators = {omega_image(p, q, n).generator for p, q in pairs}
                assert set(irreducible_quotients(params)) <= generators
