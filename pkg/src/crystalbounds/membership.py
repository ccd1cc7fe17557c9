"""Membership in P(Lambda) and max(Lambda), and the lattice parametrization of max(Lambda).

Decision procedure: a weight lies in P(Lambda) iff its dominant W-conjugate mu
satisfies mu <= Lambda, i.e. has non-negative content.  P(Lambda) is W-stable, so
reducing by simple reflections and checking the content is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import IterationLimitExceeded, LevelMismatch, SearchLimitExceeded
from .root_system import Content, HighestWeight, Hub, defect_of, hub_of

LatticePoint = tuple[int, ...]

MAX_REFLECTIONS = 10**6


@dataclass(frozen=True)
class MaxWeight:
    m: LatticePoint
    s: int

    @property
    def content(self) -> Content:
        return (self.s, *(self.s + x for x in self.m))

    @property
    def degree(self) -> int:
        return sum(self.content)


def dominant_rep(lam: HighestWeight, c: Sequence[int],
                 limit: int = MAX_REFLECTIONS) -> tuple[Content, list[int]]:
    """Reflect at the smallest index with negative hub entry until the hub is dominant."""
    cur = list(c)
    word: list[int] = []
    for _ in range(limit + 1):
        theta = hub_of(lam, cur)
        for i, t in enumerate(theta):
            if t < 0:
                cur[i] += t
                word.append(i)
                break
        else:
            return tuple(cur), word
    raise IterationLimitExceeded(f"no dominant weight after {limit} reflections from {tuple(c)}")


@lru_cache(maxsize=1 << 18)
def _in_p(lam: HighestWeight, c: Content) -> bool:
    if defect_of(lam, c) < 0:
        return False
    mu, _ = dominant_rep(lam, c)
    return all(x >= 0 for x in mu)


def in_P(lam: HighestWeight, c: Sequence[int]) -> bool:
    return _in_p(lam, tuple(c))


def is_max(lam: HighestWeight, c: Sequence[int]) -> bool:
    """True iff lam is in P(Lambda) but lam + delta is not."""
    if not in_P(lam, c):
        return False
    up = tuple(x - 1 for x in c)
    return min(up) < 0 or not in_P(lam, up)


def lattice_hub(lam: HighestWeight, m: Sequence[int]) -> Hub:
    """Hub of eta_m: theta_i = a_i + m_{i-1} + m_{i+1} - 2 m_i with m_0 = 0."""
    return hub_of(lam, (0, *m))


def s_of_m(lam: HighestWeight, m: Sequence[int], cap: int | None = None) -> MaxWeight:
    m = tuple(m)
    if len(m) != lam.rank.ell:
        raise ValueError(f"lattice point needs {lam.rank.ell} coordinates, got {len(m)}")
    if cap is None:
        cap = lam.level * (1 + sum(abs(x) for x in m)) ** 2
    s = max(0, -min(m))
    while s <= cap:
        if in_P(lam, (s, *(s + x for x in m))):
            return MaxWeight(m, s)
        s += 1
    raise SearchLimitExceeded(f"no delta-shift <= {cap} puts m={m} into P(Lambda)")


def congruence_ok(psi: Sequence[int], e: int) -> bool:
    """psi_1 + 2 psi_2 + ... + ell psi_ell == 0 mod e."""
    return sum(j * p for j, p in enumerate(psi)) % e == 0


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; None when singular."""
    n = len(rhs)
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def lattice_from_hub_rational(lam: HighestWeight, target: Sequence[Fraction]) -> list[Fraction]:
    """Real point x with lattice_hub(x) = target (target must have level r)."""
    e = lam.e
    c = lam.rank.cartan
    psi = [Fraction(ai) - Fraction(t) for ai, t in zip(lam.a, target)]
    # psi = C (0, m): rows 1..ell restricted to columns 1..ell
    sub = [[Fraction(c[i][j]) for j in range(1, e)] for i in range(1, e)]
    sol = _solve(sub, psi[1:])
    assert sol is not None, "finite Cartan matrix of type A is invertible"
    return sol


def hub_to_lattice(lam: HighestWeight, target: Sequence[int]) -> LatticePoint | None:
    """Lattice point m whose eta_m has the given hub, or None if no such m exists."""
    target = tuple(target)
    if len(target) != lam.e:
        raise ValueError(f"hub needs {lam.e} entries, got {len(target)}")
    if sum(target) != lam.level:
        raise LevelMismatch(f"hub {target} has level {sum(target)}, expected {lam.level}")
    psi = [ai - t for ai, t in zip(lam.a, target)]
    realizable = congruence_ok(psi, lam.e)
    x = lattice_from_hub_rational(lam, target)
    integral = all(v.denominator == 1 for v in x)
    assert realizable == integral, (target, psi, x)
    if not realizable:
        return None
    m = tuple(int(v) for v in x)
    assert lattice_hub(lam, m) == target
    return m


def nu_prime_corner(lam: HighestWeight, d: int, i: int) -> tuple[Hub, LatticePoint]:
    """Realizable hub with component i large and every other component <= -d."""
    if d < 1:
        raise ValueError("d must be positive")
    e, r = lam.e, lam.level
    nu = [-(d + 1)] * e
    nu[i] = r + (e - 1) * (d + 1)
    psi = [ai - v for ai, v in zip(lam.a, nu)]
    j = sum(k * p for k, p in enumerate(psi)) % e
    if j:
        psi[j] -= 1
        psi[0] += 1
    hub = tuple(ai - p for ai, p in zip(lam.a, psi))
    m = hub_to_lattice(lam, hub)
    assert m is not None
    return hub, m
