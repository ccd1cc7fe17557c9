"""The reduced crystal: weights of V(Lambda) joined by residue-labelled edges.

Two weights c and c + e_i are joined by an i-edge exactly when both are weights;
the sl_2 strings inside the crystal nest, so weight membership decides edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotAMember, VertexNotFound
from .membership import in_P
from .root_system import Content, HighestWeight, Hub, defect_of, hub_of, reflect


@dataclass(frozen=True)
class VertexInfo:
    hub: Hub
    defect: int
    degree: int


@dataclass
class CrystalGraph:
    lam: HighestWeight
    max_degree: int
    vertices: dict[Content, VertexInfo] = field(default_factory=dict)
    edges: list[tuple[Content, int]] = field(default_factory=list)

    def __contains__(self, c) -> bool:
        return tuple(c) in self.vertices

    def by_degree(self) -> dict[int, list[Content]]:
        shells: dict[int, list[Content]] = {}
        for c, info in self.vertices.items():
            shells.setdefault(info.degree, []).append(c)
        return shells

    def of_defect(self, d: int) -> list[Content]:
        return [c for c, info in self.vertices.items() if info.defect == d]


def _unit(e: int, i: int, sign: int = 1) -> Content:
    v = [0] * e
    v[i] = sign
    return tuple(v)


def _shift(c: Sequence[int], i: int, k: int) -> Content:
    out = list(c)
    out[i] += k
    return tuple(out)


def enumerate_graph(lam: HighestWeight, max_degree: int) -> CrystalGraph:
    """All weights of degree <= max_degree, built shell by shell from Lambda."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    e = lam.e
    shell = {(0,) * e}
    found: set[Content] = set(shell)
    for _ in range(max_degree):
        candidates = {_shift(c, i, 1) for c in shell for i in range(e)}
        shell = {c for c in candidates if in_P(lam, c)}
        found |= shell
    graph = CrystalGraph(lam, max_degree)
    for c in sorted(found):
        graph.vertices[c] = VertexInfo(hub_of(lam, c), defect_of(lam, c), sum(c))
    for c in graph.vertices:
        for i in range(e):
            if _shift(c, i, 1) in found:
                graph.edges.append((c, i))
    return graph


def i_string(graph: CrystalGraph, c: Sequence[int], i: int) -> list[Content]:
    """The maximal i-string through c, ordered from its top (lowest degree) down.

    Membership is checked directly, so strings running past max_degree are complete.
    """
    c = tuple(c)
    if c not in graph.vertices:
        raise VertexNotFound(c)
    lam = graph.lam
    top = c
    while in_P(lam, _shift(top, i, -1)):
        top = _shift(top, i, -1)
    out = [top]
    while in_P(lam, _shift(out[-1], i, 1)):
        out.append(_shift(out[-1], i, 1))
    return out


def is_i_external(lam: HighestWeight, c: Sequence[int], i: int) -> bool:
    """Weight-level externality: no i-edge on the side the sign of theta_i points to.

    theta_i = 0 imposes no condition, so such weights count as i-external.
    """
    c = tuple(c)
    if not in_P(lam, c):
        raise NotAMember(c)
    theta = hub_of(lam, c)[i]
    if theta > 0:
        return not in_P(lam, _shift(c, i, -1))
    if theta < 0:
        return not in_P(lam, _shift(c, i, 1))
    return True


def is_external(lam: HighestWeight, c: Sequence[int]) -> bool:
    """i-external for every residue i."""
    return all(is_i_external(lam, c, i) for i in range(lam.e))


@dataclass(frozen=True)
class CriterionViolation:
    content: Content
    residue: int
    hub: Hub
    defect: int


def check_external_criterion(graph: CrystalGraph) -> list[CriterionViolation]:
    """Vertices with defect <= |theta_i| that are nevertheless not i-external."""
    bad = []
    for c, info in graph.vertices.items():
        for i, t in enumerate(info.hub):
            if info.defect <= abs(t) and not is_i_external(graph.lam, c, i):
                bad.append(CriterionViolation(c, i, info.hub, info.defect))
    return bad


def reduce_weight(lam: HighestWeight, c: Sequence[int]) -> tuple[Content, list[int]]:
    """Reflect strings toward lower degree while some theta_i <= -defect.

    At each step the residue with the most negative theta_i (largest degree drop)
    is used, ties going to the smaller index.
    """
    c = tuple(c)
    if not in_P(lam, c):
        raise NotAMember(c)
    d = defect_of(lam, c)
    word = []
    while True:
        theta = hub_of(lam, c)
        # theta_i < 0 as well, so that d = 0 cannot loop on theta_i = 0
        options = [(t, i) for i, t in enumerate(theta) if t <= -d and t < 0]
        if not options:
            return c, word
        _, i = min(options)
        c = reflect(lam, c, i)
        word.append(i)
