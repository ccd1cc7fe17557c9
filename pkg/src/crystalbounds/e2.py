"""Closed forms for e = 2, Lambda = a0*Lambda_0 + a1*Lambda_1.

max(Lambda) is {eta_m : m in Z}.  Writing m = q*r + u with -b0 <= u <= r-b0-1,
eta_m is the translate of eta_u by -q*alpha_1, which fixes the defect and moves
the delta-shift by a quadratic in q.
"""
from __future__ import annotations

from dataclasses import dataclass

from .crystal_graph import CrystalGraph
from .errors import CapTooLow
from .root_system import HighestWeight

CORRECTED = "corrected"
PRINTED = "printed"


@dataclass(frozen=True)
class E2Context:
    a0: int
    a1: int

    def __post_init__(self):
        if self.a0 < 0 or self.a1 < 0 or self.a0 + self.a1 < 1:
            raise ValueError(f"not dominant of positive level: ({self.a0}, {self.a1})")

    @property
    def r(self) -> int:
        return self.a0 + self.a1

    @property
    def b0(self) -> int:
        return self.a0 // 2

    @property
    def weight(self) -> HighestWeight:
        return HighestWeight.of(self.a0, self.a1)


@dataclass(frozen=True)
class QUDecomposition:
    m: int
    q: int
    u: int


def decompose(ctx: E2Context, m: int) -> QUDecomposition:
    q, rest = divmod(m + ctx.b0, ctx.r)
    return QUDecomposition(m, q, rest - ctx.b0)


def s_closed(ctx: E2Context, m: int, variant: str = CORRECTED) -> int:
    """delta-shift of eta_m.

    ``printed`` keeps +q(a1 - 2u) in the middle term; it disagrees with the
    membership oracle (first at m=-4 for (a0, a1) = (2, 1)) and exists only for
    discrepancy reports.
    """
    qu = decompose(ctx, m)
    q, u = qu.q, qu.u
    base = max(-u, 0, u - ctx.a1) + q * q * ctx.r
    if variant == CORRECTED:
        return base - q * (ctx.a1 - 2 * u)
    if variant == PRINTED:
        return base + q * (ctx.a1 - 2 * u)
    raise ValueError(f"unknown variant {variant!r}")


def defect_closed(ctx: E2Context, m: int) -> int:
    u = decompose(ctx, m).u
    return max(-u * (ctx.a0 + u), u * (ctx.a1 - u), (u - ctx.a1) * (ctx.r - u))


@dataclass(frozen=True)
class E2Row:
    m: int
    hub: tuple[int, int]
    defect: int
    content: tuple[int, int]
    degree: int


def invariants_closed(ctx: E2Context, m: int, variant: str = CORRECTED) -> E2Row:
    s = s_closed(ctx, m, variant)
    return E2Row(m, (ctx.a0 + 2 * m, ctx.a1 - 2 * m), defect_closed(ctx, m),
                 (s, s + m), 2 * s + m)


def enumerate_max_e2(ctx: E2Context, m_lo: int, m_hi: int) -> list[E2Row]:
    if m_lo > m_hi:
        raise ValueError("empty m-range")
    return [invariants_closed(ctx, m) for m in range(m_lo, m_hi + 1)]


def n_prime(ctx: E2Context, d: int) -> tuple[int, int]:
    """(q, N'(d)) with q = ceil((d + max(a0, a1)) / 2r) and N' = 2rq^2 + q(r + a1)."""
    if d < 0:
        raise ValueError("defect must be non-negative")
    q = -(-(d + max(ctx.a0, ctx.a1)) // (2 * ctx.r))
    return q, 2 * ctx.r * q * q + q * (ctx.r + ctx.a1)


@dataclass
class NPrimeCheck:
    d: int
    n_prime: int
    sharp: int
    passed: bool
    violations: list[tuple[int, ...]]


def verify_n_prime(ctx: E2Context, d: int, graph: CrystalGraph, margin: int = 2) -> NPrimeCheck:
    """Every defect-d vertex of degree >= N'(d) has some theta_i <= -d, and N' >= N."""
    from .bounds import sharp_N

    _, bound = n_prime(ctx, d)
    if graph.max_degree < bound + margin:
        raise CapTooLow(f"graph stops at degree {graph.max_degree}, need {bound + margin}")
    violations = []
    if d > 0:
        violations = [c for c in graph.of_defect(d)
                      if graph.vertices[c].degree >= bound and min(graph.vertices[c].hub) > -d]
    sharp = sharp_N(ctx.weight, d)
    return NPrimeCheck(d, bound, sharp, not violations and bound >= sharp, violations)
