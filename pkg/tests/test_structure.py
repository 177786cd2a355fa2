from fractions import Fraction

import pytest

from dpseries import (
    ConstituentLabel,
    InducedRepParams,
    diagram_to_dot,
    diagram_to_json,
    enumerate_constituents,
    generated_submodule,
    irreducible_quotients,
    irreducible_submodules,
    module_diagram,
    socle_series,
)
from dpseries.structure import diagram_from_json

from conftest import params_from_sigma_tilde


P_SW = InducedRepParams(2, 0, Fraction(1, 2))
P_1A = InducedRepParams(2, 1, Fraction(-1))
P_AXIS = InducedRepParams(2, 1, Fraction(0))


def L(i, j):
    return ConstituentLabel("L", i, j)


def R(i, j):
    return ConstituentLabel("R", i, j)


def test_diagram_worked_points():
    d = module_diagram(P_1A)
    assert d.nodes == (R(0, 0), R(0, 1), R(1, 0))
    assert set(d.edges) == {(R(1, 0), R(0, 0)), (R(0, 1), R(0, 0))}

    d = module_diagram(P_SW)
    assert d.nodes == (L(0, 0), L(1, 0), L(1, 1))
    assert set(d.edges) == {(L(1, 0), L(0, 0)), (L(1, 0), L(1, 1))}

    d = module_diagram(P_AXIS)
    assert d.nodes == (R(0, 1), R(1, 0))
    assert d.edges == ()


def test_socle_worked_points():
    assert socle_series(P_SW).layers == ((L(0, 0), L(1, 1)), (L(1, 0),))
    assert socle_series(P_1A).layers == ((R(0, 0),), (R(0, 1), R(1, 0)))
    layers = socle_series(InducedRepParams(2, 0, Fraction(-3, 2))).layers
    assert layers[0] == (L(0, 1),)  # socle contains the trivial representation


def test_generated_submodule_worked_points():
    assert generated_submodule(P_SW, L(1, 0)).members == (L(0, 0), L(1, 0), L(1, 1))
    assert generated_submodule(P_SW, L(1, 1)).members == (L(1, 1),)
    with pytest.raises(ValueError, match="not a nonempty constituent"):
        generated_submodule(P_SW, L(0, 1))


def test_socle_labels_generate_themselves():
    for params in (P_SW, P_1A, P_AXIS, InducedRepParams(3, 2, Fraction(-2))):
        for lab in socle_series(params).layers[0]:
            assert generated_submodule(params, lab).members == (lab,)


def test_sinks_and_sources_worked_points():
    assert irreducible_submodules(P_SW) == (L(0, 0), L(1, 1))
    assert irreducible_quotients(P_SW) == (L(1, 0),)
    assert irreducible_submodules(P_1A) == (R(0, 0),)
    assert irreducible_quotients(P_1A) == (R(0, 1), R(1, 0))
    assert irreducible_submodules(P_AXIS) == irreducible_quotients(P_AXIS) == (R(0, 1), R(1, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
@pytest.mark.parametrize("st_val", [-5, -2, 0, 1, 3, 6])
def test_socle_matches_longest_downward_paths(n, alpha, st_val):
    params = params_from_sigma_tilde(n, alpha, st_val)
    diagram = module_diagram(params)
    socle = socle_series(params)

    depth = {}

    def longest(lab):
        if lab not in depth:
            depth[lab] = 1 + max(
                (longest(t) for s, t in diagram.edges if s == lab), default=0
            )
        return depth[lab]

    for lab in diagram.nodes:
        assert lab in socle.layers[longest(lab) - 1]
    assert irreducible_submodules(params) == socle.layers[0]
    assert irreducible_quotients(params) == socle.layers[-1]


@pytest.mark.parametrize("st_val", [-4, -1, 1, 2, 4])
def test_edges_join_adjacent_levels(st_val):
    for n in (2, 3, 4, 5):
        for alpha in range(4):
            params = params_from_sigma_tilde(n, alpha, st_val)
            cs = enumerate_constituents(params)
            level = (
                (lambda x: x.i + x.j) if cs.case.family == "R" else (lambda x: x.i - x.j)
            )
            for u, v in module_diagram(params).edges:
                assert abs(level(u) - level(v)) == 1


def test_generated_submodules_downward_closed():
    for params in (P_SW, P_1A, InducedRepParams(4, 2, Fraction(-5, 2)), params_from_sigma_tilde(3, 1, 4)):
        diagram = module_diagram(params)
        for lab in diagram.nodes:
            sub = set(generated_submodule(params, lab).members)
            for u, v in diagram.edges:
                if u in sub:
                    assert v in sub


def test_json_round_trip():
    diagram = module_diagram(P_SW)
    socle = socle_series(P_SW)
    text = diagram_to_json(diagram, socle)
    diagram2, socle2 = diagram_from_json(text)
    assert diagram2 == diagram
    assert socle2 == socle
    assert diagram_to_json(diagram2, socle2) == text


def test_dot_is_deterministic():
    a = diagram_to_dot(module_diagram(P_SW), socle_series(P_SW))
    b = diagram_to_dot(module_diagram(P_SW), socle_series(P_SW))
    assert a == b
    assert a.count("->") == 2
    assert a.count("rank=same") == 2
