"""Module diagrams, socle series and generated submodules.

The module diagram is a directed simple graph on the nonempty constituents;
an edge (upper, lower) records a nonsplit extension with the lower node as
submodule, and all edges are directed downward (toward the socle).  The edge
pattern is an index-adjacency rule depending on the case and the sign of
sigma:

* family R, sigma <= -1:  (i,j) -> (i-1,j), (i,j-1)   (levels i+j decrease)
* family R, sigma  =  0:  no edges (direct sum)
* family R, sigma >=  1:  (i,j) -> (i+1,j), (i,j+1)
* family L, Case 2a:      (i,j) -> (i+1,j), (i,j-1)   (levels i-j increase)
* family L, Case 2b:      (i,j) -> (i-1,j), (i,j+1)   (levels j-i increase)

restricted to surviving (nonempty) nodes and transitively reduced.  The socle
series follows the same level function: layer 1 is the set of sinks, layer l
the nodes whose longest downward path has length l-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .parameters import CaseTag, InducedRepParams
from .constituents import (
    ConstituentLabel,
    ConstituentSet,
    enumerate_constituents,
    parse_label,
    sign_branch,
)

__all__ = [
    "ModuleDiagram",
    "SocleSeries",
    "Submodule",
    "diagram_from_json",
    "diagram_to_dot",
    "diagram_to_json",
    "generated_submodule",
    "irreducible_quotients",
    "irreducible_submodules",
    "module_diagram",
    "socle_series",
]

Edge = tuple[ConstituentLabel, ConstituentLabel]


@dataclass(frozen=True)
class ModuleDiagram:
    nodes: tuple[ConstituentLabel, ...]
    edges: tuple[Edge, ...]  # (upper, lower), pointing toward the socle

    def successors(self, label: ConstituentLabel) -> tuple[ConstituentLabel, ...]:
        return tuple(v for u, v in self.edges if u == label)

    def sinks(self) -> tuple[ConstituentLabel, ...]:
        with_out = {u for u, _ in self.edges}
        return tuple(x for x in self.nodes if x not in with_out)

    def sources(self) -> tuple[ConstituentLabel, ...]:
        with_in = {v for _, v in self.edges}
        return tuple(x for x in self.nodes if x not in with_in)


@dataclass(frozen=True)
class SocleSeries:
    layers: tuple[tuple[ConstituentLabel, ...], ...]  # layers[0] is the socle


@dataclass(frozen=True)
class Submodule:
    generator: ConstituentLabel
    members: tuple[ConstituentLabel, ...]


def _down_steps(case: CaseTag, branch: str) -> tuple[tuple[int, int], ...]:
    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        if branch == "neg":
            return ((-1, 0), (0, -1))
        if branch == "zero":
            return ()
        return ((1, 0), (0, 1))
    if case is CaseTag.CASE_2A:
        return ((1, 0), (0, -1))
    return ((-1, 0), (0, 1))


def _transitive_reduction(nodes: tuple[ConstituentLabel, ...], edges: set[Edge]) -> tuple[Edge, ...]:
    succ = {x: {v for u, v in edges if u == x} for x in nodes}

    def reach(start: ConstituentLabel) -> set[ConstituentLabel]:
        seen: set[ConstituentLabel] = set()
        stack = [start]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    reachable = {x: reach(x) for x in nodes}
    reduced = {
        (u, v)
        for u, v in edges
        if not any(w != v and v in reachable[w] for w in succ[u])
    }
    return tuple(sorted(reduced))


def module_diagram(params: InducedRepParams) -> ModuleDiagram:
    """Hasse diagram of the generation order on the nonempty constituents."""
    cs = enumerate_constituents(params)
    node_set = set(cs.labels)
    steps = _down_steps(cs.case, sign_branch(params))
    edges: set[Edge] = set()
    for lab in cs.labels:
        for di, dj in steps:
            tgt_i, tgt_j = lab.i + di, lab.j + dj
            if tgt_i < 0 or tgt_j < 0:
                continue
            tgt = ConstituentLabel(lab.family, tgt_i, tgt_j)
            if tgt in node_set:
                edges.add((lab, tgt))
    return ModuleDiagram(nodes=cs.labels, edges=_transitive_reduction(cs.labels, edges))


def _layer_index(case: CaseTag, branch: str, cs: ConstituentSet, lab: ConstituentLabel) -> int:
    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        if branch == "zero":
            return 1
        levels = [x.i + x.j for x in cs.labels]
        if branch == "neg":
            return lab.i + lab.j - min(levels) + 1
        return max(levels) - (lab.i + lab.j) + 1
    assert cs.index_bound is not None
    r = cs.index_bound[1]
    if case is CaseTag.CASE_2A:
        if branch == "pos":
            return (lab.j - lab.i) + 2
        return r - (lab.i - lab.j) + 1
    if branch == "pos":
        return (lab.i - lab.j) + 1
    return r - (lab.j - lab.i) + 1


def socle_series(params: InducedRepParams) -> SocleSeries:
    """Socle filtration layers per the case theorems (layer 1 = socle)."""
    cs = enumerate_constituents(params)
    branch = sign_branch(params)
    by_layer: dict[int, list[ConstituentLabel]] = {}
    for lab in cs.labels:
        by_layer.setdefault(_layer_index(cs.case, branch, cs, lab), []).append(lab)
    count = max(by_layer, default=0)
    if sorted(by_layer) != list(range(1, count + 1)):
        raise RuntimeError(f"socle layers not contiguous at {params}: {sorted(by_layer)}")
    return SocleSeries(layers=tuple(tuple(sorted(by_layer[l])) for l in range(1, count + 1)))


def generated_submodule(params: InducedRepParams, label: ConstituentLabel) -> Submodule:
    """The smallest submodule containing the given constituent.

    Realized as an explicit index set over the nonempty constituents:
    family R takes {i >= s, j >= t} for sigma > 0 and {i <= s, j <= t} for
    sigma < 0 (the singleton at sigma = 0); Case 2a takes {i >= s, j <= t};
    Case 2b takes {i <= s, j >= t}.
    """
    cs = enumerate_constituents(params)
    if label not in cs.labels:
        raise ValueError(f"label is not a nonempty constituent here: {label} at {params}")
    s, t = label.i, label.j
    case = cs.case
    branch = sign_branch(params)
    if case in (CaseTag.CASE_1A, CaseTag.CASE_1B):
        if branch == "pos":
            keep = lambda x: x.i >= s and x.j >= t
        elif branch == "neg":
            keep = lambda x: x.i <= s and x.j <= t
        else:
            keep = lambda x: (x.i, x.j) == (s, t)
    elif case is CaseTag.CASE_2A:
        keep = lambda x: x.i >= s and x.j <= t
    else:
        keep = lambda x: x.i <= s and x.j >= t
    members = tuple(x for x in cs.labels if keep(x))
    return Submodule(generator=label, members=members)


def irreducible_submodules(params: InducedRepParams) -> tuple[ConstituentLabel, ...]:
    """Diagram sinks; equals the socle (layer 1)."""
    return tuple(sorted(module_diagram(params).sinks()))


def irreducible_quotients(params: InducedRepParams) -> tuple[ConstituentLabel, ...]:
    """Diagram sources; equals the top socle layer."""
    return tuple(sorted(module_diagram(params).sources()))


def diagram_to_json(diagram: ModuleDiagram, socle: SocleSeries) -> str:
    payload = {
        "nodes": [str(x) for x in diagram.nodes],
        "edges": [[str(u), str(v)] for u, v in diagram.edges],
        "layers": [[str(x) for x in layer] for layer in socle.layers],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def diagram_from_json(text: str) -> tuple[ModuleDiagram, SocleSeries]:
    payload = json.loads(text)
    nodes = tuple(parse_label(x) for x in payload["nodes"])
    edges = tuple((parse_label(u), parse_label(v)) for u, v in payload["edges"])
    layers = tuple(tuple(parse_label(x) for x in layer) for layer in payload["layers"])
    return ModuleDiagram(nodes=nodes, edges=edges), SocleSeries(layers=layers)


def diagram_to_dot(diagram: ModuleDiagram, socle: SocleSeries) -> str:
    """Deterministic DOT rendering, one rank per socle layer, top layer first."""
    lines = ["digraph module_diagram {", "  rankdir=TB;", "  node [shape=box];"]
    for layer in reversed(socle.layers):
        names = "; ".join(f'"{x}"' for x in sorted(layer))
        lines.append(f"  {{ rank=same; {names}; }}")
    for u, v in sorted(diagram.edges):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
