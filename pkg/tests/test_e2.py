import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystalbounds.bounds import sharp_N
from crystalbounds.crystal_graph import enumerate_graph
from crystalbounds.e2 import (CORRECTED, PRINTED, E2Context, decompose, defect_closed,
                              enumerate_max_e2, invariants_closed, n_prime, s_closed,
                              verify_n_prime)
from crystalbounds.errors import CapTooLow
from crystalbounds.membership import is_max, s_of_m
from crystalbounds.root_system import defect_of, hub_of

CTX = E2Context(2, 1)
contexts = st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda t: sum(t) > 0).map(
    lambda t: E2Context(*t))


@pytest.mark.parametrize("m, q, u", [(5, 2, -1), (0, 0, 0), (-4, -1, -1)])
def test_decompose_examples(m, q, u):
    qu = decompose(CTX, m)
    assert (qu.q, qu.u) == (q, u)


@given(contexts, st.integers(-500, 500))
def test_decompose_window(ctx, m):
    qu = decompose(ctx, m)
    assert qu.q * ctx.r + qu.u == m
    assert -ctx.b0 <= qu.u <= ctx.r - ctx.b0 - 1


def test_s_closed_examples():
    assert s_closed(CTX, 3) == 2
    assert s_closed(CTX, -3) == 4
    assert s_closed(CTX, -4) == 7
    assert s_closed(CTX, -4, PRINTED) == 1
    assert s_of_m(CTX.weight, (-4,)).s == 7
    with pytest.raises(ValueError):
        s_closed(CTX, 0, "other")


def test_invariants_closed_examples():
    r = invariants_closed(CTX, 1)
    assert (r.hub, r.defect, r.content, r.degree) == ((4, -1), 0, (0, 1), 1)
    r = invariants_closed(CTX, 2)
    assert (r.hub, r.defect, r.content, r.degree) == ((6, -3), 1, (1, 3), 4)
    r = invariants_closed(CTX, 0)
    assert (r.hub, r.defect, r.content, r.degree) == ((2, 1), 0, (0, 0), 0)


def test_example_table():
    rows = enumerate_max_e2(CTX, -3, 3)
    assert [r.hub for r in rows] == [(-4, 7), (-2, 5), (0, 3), (2, 1), (4, -1), (6, -3), (8, -5)]
    assert [r.defect for r in rows] == [0, 0, 1, 0, 0, 1, 0]
    assert [r.content for r in rows] == [(4, 1), (2, 0), (1, 0), (0, 0), (0, 1), (1, 3), (2, 5)]
    assert [r.degree for r in rows] == [5, 2, 1, 0, 1, 4, 7]
    assert all(is_max(CTX.weight, r.content) for r in rows)
    assert len(enumerate_max_e2(CTX, 0, 0)) == 1


def test_table_for_1_1():
    ctx = E2Context(1, 1)
    rows = enumerate_max_e2(ctx, -2, 2)
    assert len(rows) == 5
    for r in rows:
        assert is_max(ctx.weight, r.content)
        u = decompose(ctx, r.m).u
        assert u in (0, 1)
        assert r.defect == max(-u * (1 + u), u * (1 - u), (u - 1) * (2 - u)) == 0


def test_closed_form_matches_oracle_random():
    rng = random.Random(2024)
    pairs = set()
    while len(pairs) < 10:
        a0 = rng.randint(0, 8)
        a1 = rng.randint(0, 8 - a0)
        if a0 + a1:
            pairs.add((a0, a1))
    for a0, a1 in sorted(pairs):
        ctx = E2Context(a0, a1)
        lam = ctx.weight
        for m in range(-50, 51):
            w = s_of_m(lam, (m,))
            assert s_closed(ctx, m) == w.s
            row = invariants_closed(ctx, m)
            assert row.hub == hub_of(lam, w.content)
            assert row.defect == defect_of(lam, w.content)
            assert row.degree == w.degree and row.content == w.content


def test_max_set_is_exactly_the_eta_m():
    lam = CTX.weight
    g = enumerate_graph(lam, 30)
    maxes = {c for c in g.vertices if is_max(lam, c)}
    listed = {r.content for r in enumerate_max_e2(CTX, -30, 30) if r.degree <= 30}
    assert maxes == listed


@given(contexts)
def test_defect_symmetry_under_s1(ctx):
    for u in range(-ctx.b0, 0):
        assert defect_closed(ctx, u) == defect_closed(ctx, ctx.a1 - u)


@given(contexts, st.integers(-20, 20), st.integers(-5, 5))
def test_defect_independent_of_q(ctx, m, q):
    assert defect_closed(ctx, m) == defect_closed(ctx, m + q * ctx.r)


@pytest.mark.parametrize("d, q, bound", [(1, 1, 10), (6, 2, 32), (0, 1, 10)])
def test_n_prime_examples(d, q, bound):
    assert n_prime(CTX, d) == (q, bound)


def test_n_prime_q_row():
    assert [n_prime(CTX, d)[0] for d in (0, 1, 3, 4, 6, 7, 9, 10)] == [1, 1, 1, 1, 2, 2, 2, 2]


def test_verify_n_prime_example():
    g = enumerate_graph(CTX.weight, 40)
    for d in (0, 1, 3, 4, 6, 7, 9, 10):
        res = verify_n_prime(CTX, d, g)
        assert res.passed and res.n_prime >= res.sharp
    # empty stratum
    assert verify_n_prime(CTX, 2, g).passed
    with pytest.raises(CapTooLow):
        verify_n_prime(CTX, 6, enumerate_graph(CTX.weight, 20))


@pytest.mark.parametrize("a0, a1", [(a0, a1) for a0 in range(5) for a1 in range(5) if a0 + a1])
def test_n_prime_valid_small_weights(a0, a1):
    ctx = E2Context(a0, a1)
    depth = max(n_prime(ctx, d)[1] for d in range(11)) + 2
    g = enumerate_graph(ctx.weight, depth)
    for d in range(11):
        res = verify_n_prime(ctx, d, g)
        assert res.passed, (a0, a1, d, res)
        assert res.sharp == sharp_N(ctx.weight, d)
