"""Cartan data for affine type A and the weight invariants in content coordinates.

A weight is written ``lam = Lambda - sum_i c_i alpha_i`` and handled through its
content vector ``c``.  Everything here is plain Python ``int`` arithmetic, so no
quantity can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidRank

Content = tuple[int, ...]
Hub = tuple[int, ...]


@dataclass(frozen=True)
class RankData:
    e: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def ell(self) -> int:
        return self.e - 1


def build_rank(e: int) -> RankData:
    """Cartan matrix of A_{e-1}^(1); for e=2 the off-diagonal entries are -2."""
    if not isinstance(e, int) or e < 2:
        raise InvalidRank(f"need e >= 2, got {e!r}")
    rows = []
    for i in range(e):
        row = [0] * e
        row[i] = 2
        if e == 2:
            row[1 - i] = -2
        else:
            row[(i + 1) % e] = -1
            row[(i - 1) % e] = -1
        rows.append(tuple(row))
    return RankData(e, tuple(rows))


@dataclass(frozen=True)
class HighestWeight:
    rank: RankData
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != self.rank.e:
            raise ValueError(f"weight has {len(self.a)} coefficients, expected {self.rank.e}")
        if any(x < 0 for x in self.a) or sum(self.a) < 1:
            raise ValueError(f"not dominant of positive level: {self.a}")

    @classmethod
    def of(cls, *a: int) -> "HighestWeight":
        """``HighestWeight.of(2, 1)`` is 2*Lambda_0 + Lambda_1 with e=2."""
        return cls(build_rank(len(a)), tuple(int(x) for x in a))

    @property
    def e(self) -> int:
        return self.rank.e

    @property
    def level(self) -> int:
        return sum(self.a)


def level_of(lam: HighestWeight) -> int:
    return lam.level


def cartan_apply(rank: RankData, c: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, c)) for row in rank.cartan)


def bilinear(rank: RankData, x: Sequence[int], y: Sequence[int]) -> int:
    """(sum x_i alpha_i | sum y_j alpha_j)."""
    return sum(xi * v for xi, v in zip(x, cartan_apply(rank, y)))


def hub_of(lam: HighestWeight, c: Sequence[int]) -> Hub:
    # theta = a - C c
    return tuple(ai - v for ai, v in zip(lam.a, cartan_apply(lam.rank, c)))


def defect_of(lam: HighestWeight, c: Sequence[int]) -> int:
    quad = bilinear(lam.rank, c, c)
    assert quad % 2 == 0
    return sum(ai * ci for ai, ci in zip(lam.a, c)) - quad // 2


def degree_of(c: Sequence[int]) -> int:
    return sum(c)


def reflect(lam: HighestWeight, c: Sequence[int], i: int) -> Content:
    """Simple reflection s_i: the i-th content entry gains theta_i."""
    theta_i = hub_of(lam, c)[i]
    out = list(c)
    out[i] += theta_i
    return tuple(out)


def add_delta(c: Sequence[int], k: int) -> Content:
    """Content of lam - k*delta."""
    return tuple(x + k for x in c)


def translate(lam: HighestWeight, c: Sequence[int], k: Sequence[int]) -> Content:
    """Content of t_alpha(lam) for alpha = sum_{i>=1} k_i alpha_i.

    t_alpha(z) = z + r*alpha - ((z|alpha) + r*(alpha|alpha)/2) * delta
    """
    if len(k) != lam.rank.ell:
        raise ValueError(f"translation needs {lam.rank.ell} coefficients, got {len(k)}")
    alpha = (0, *k)
    r = lam.level
    theta = hub_of(lam, c)
    # (z|alpha_i) = <z, h_i> = theta_i
    z_alpha = sum(ki * ti for ki, ti in zip(alpha, theta))
    shift = z_alpha + r * bilinear(lam.rank, alpha, alpha) // 2
    return tuple(ci - r * ai + shift for ci, ai in zip(c, alpha))
