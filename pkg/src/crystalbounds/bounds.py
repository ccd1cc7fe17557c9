"""Finite regions of the lattice M and the sharp degree bound N(d), for any e.

A weight of defect d whose hub has some theta_i <= -d sits at the high-degree end
of its i-string and reflects to lower degree.  The hubs with no such component
form a simplex in M; its integer points, shifted down by multiples of delta to
reach defect d, are the only weights that fail to reduce.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .crystal_graph import CrystalGraph
from .errors import CapTooLow, DegenerateSimplex
from .membership import (LatticePoint, MaxWeight, hub_to_lattice, lattice_from_hub_rational,
                         lattice_hub, s_of_m)
from .root_system import Content, HighestWeight, Hub, add_delta, defect_of

REDUCIBILITY = "reducibility"
BOTH_SIDES = "both-sides"


@dataclass(frozen=True)
class RegionPoint:
    m: LatticePoint
    max_weight: MaxWeight
    hub: Hub
    defect: int
    degree: int

    @property
    def content(self) -> Content:
        return self.max_weight.content


@dataclass
class RegionReport:
    d: int
    points: list[RegionPoint]
    boundary: list[RegionPoint]
    simplex_corners: list[tuple[Fraction, ...]]
    bounding_box: list[tuple[int, int]]
    shell_violations: list[LatticePoint] = field(default_factory=list)


def _region_point(lam: HighestWeight, m: LatticePoint) -> RegionPoint:
    w = s_of_m(lam, m)
    return RegionPoint(m, w, lattice_hub(lam, m), defect_of(lam, w.content), w.degree)


def simplex_corners(lam: HighestWeight, d: int) -> list[tuple[Fraction, ...]]:
    """Vertices of {x : theta_j(x) >= -d for all j}, one per free residue i."""
    e, r = lam.e, lam.level
    corners = []
    for i in range(e):
        target = [Fraction(-d)] * e
        target[i] = Fraction(r + (e - 1) * d)
        try:
            corners.append(tuple(lattice_from_hub_rational(lam, target)))
        except AssertionError as exc:  # pragma: no cover - type A Cartan data is never singular
            raise DegenerateSimplex(str(exc)) from exc
    return corners


def _box(corners) -> list[tuple[int, int]]:
    ell = len(corners[0])
    return [(math.floor(min(c[k] for c in corners)), math.ceil(max(c[k] for c in corners)))
            for k in range(ell)]


def region_points(lam: HighestWeight, d: int) -> RegionReport:
    """Lattice points with min theta > -d, plus those with min theta == -d as boundary."""
    if d < 1:
        raise ValueError("d must be positive")
    corners = simplex_corners(lam, d)
    box = _box(corners)
    inside, boundary, leaks = [], [], []
    for m in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        low = min(lattice_hub(lam, m))
        on_shell = any(x in (lo, hi) for x, (lo, hi) in zip(m, box))
        if low > -d:
            inside.append(_region_point(lam, m))
            if on_shell:
                leaks.append(m)
        elif low == -d:
            boundary.append(_region_point(lam, m))
    return RegionReport(d, inside, boundary, corners, box, leaks)


def _shift_to_defect(lam: HighestWeight, p: RegionPoint, d: int) -> Content | None:
    """Content of eta_m - k*delta with defect d, if some k >= 0 gives it."""
    k, rem = divmod(d - p.defect, lam.level)
    if k < 0 or rem:
        return None
    return add_delta(p.content, k)


def both_sides_points(lam: HighestWeight, d: int) -> list[RegionPoint]:
    """e=2 only: lattice points with min_i |theta_i| < d."""
    if lam.e != 2:
        raise ValueError("the both-sides criterion gives a finite set only for e=2")
    a0, a1 = lam.a
    # |a0 + 2m| < d or |a1 - 2m| < d
    lo = min((-d - a0) // 2, (a1 - d) // 2) - 1
    hi = max((d - a0) // 2, (a1 + d) // 2) + 1
    return [_region_point(lam, (m,)) for m in range(lo, hi + 1)
            if min(abs(t) for t in lattice_hub(lam, (m,))) < d]


@dataclass(frozen=True)
class FailingWeight:
    m: LatticePoint
    content: Content
    hub: Hub
    degree: int


def failing_weights(lam: HighestWeight, d: int, mode: str = REDUCIBILITY) -> list[FailingWeight]:
    """Defect-d weights that do not reduce to lower degree, sorted by m."""
    if d < 1:
        return []
    if mode == REDUCIBILITY:
        pts = region_points(lam, d).points
    elif mode == BOTH_SIDES:
        pts = both_sides_points(lam, d)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for p in pts:
        c = _shift_to_defect(lam, p, d)
        if c is not None:
            out.append(FailingWeight(p.m, c, p.hub, sum(c)))
    return out


def sharp_N(lam: HighestWeight, d: int, mode: str = REDUCIBILITY) -> int:
    """Least N such that every defect-d weight of degree >= N reduces; N(0) = 0."""
    if d < 0:
        raise ValueError("defect must be non-negative")
    fails = failing_weights(lam, d, mode)
    return 1 + max(f.degree for f in fails) if fails else 0


def sharpness_witness(lam: HighestWeight, d: int, mode: str = REDUCIBILITY) -> FailingWeight | None:
    fails = failing_weights(lam, d, mode)
    return max(fails, key=lambda f: (f.degree, f.m)) if fails else None


def dominant_hubs(lam: HighestWeight):
    """All non-negative hubs of level r that occur on max(Lambda)."""
    e, r = lam.e, lam.level
    for cut in itertools.combinations(range(r + e - 1), e - 1):
        parts = [b - a - 1 for a, b in zip((-1, *cut), (*cut, r + e - 1))]
        if hub_to_lattice(lam, parts) is not None:
            yield tuple(parts)


def stratum_nonempty(lam: HighestWeight, d: int) -> bool:
    """Whether any weight of V(Lambda) has defect d.

    Every weight is W-conjugate to a dominant one of the same defect, and the
    dominant weights are the eta_m with dominant hub shifted by multiples of delta.
    """
    for hub in dominant_hubs(lam):
        m = hub_to_lattice(lam, hub)
        k, rem = divmod(d - defect_of(lam, s_of_m(lam, m).content), lam.level)
        if k >= 0 and rem == 0:
            return True
    return False


@dataclass
class BoundCheck:
    d: int
    bound: int
    passed: bool
    # defect-d vertices of degree >= bound with no theta_i <= -d
    violations: list[Content] = field(default_factory=list)
    witness: Content | None = None
    # degrees N..checked_to were scanned; empty when checked_to < N
    checked_to: int = 0


def _reducible(hub, d: int) -> bool:
    return min(hub) <= -d


def verify_N(graph: CrystalGraph, d: int, N: int) -> BoundCheck:
    """Check N against the enumerated graph: everything from degree N on reduces,
    and something at degree N - 1 does not."""
    if graph.max_degree < N - 1:
        raise CapTooLow(f"graph stops at degree {graph.max_degree}, "
                        f"no sharpness witness for N={N} is visible")
    if d == 0:
        return BoundCheck(d, N, N == 0, checked_to=graph.max_degree)
    stratum = graph.of_defect(d)
    violations = [c for c in stratum
                  if graph.vertices[c].degree >= N and not _reducible(graph.vertices[c].hub, d)]
    witness = None
    if N >= 1:
        witness = next((c for c in stratum if graph.vertices[c].degree == N - 1
                        and not _reducible(graph.vertices[c].hub, d)), None)
    passed = not violations and (N == 0 or witness is not None)
    return BoundCheck(d, N, passed, violations, witness, graph.max_degree)
