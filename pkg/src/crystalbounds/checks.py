"""Invariant suites behind ``crystalbounds check``.

Each suite returns ``(number_checked, failures)`` where failures are JSON-ready dicts.
"""
from __future__ import annotations

import itertools

from .bounds import region_points, sharp_N, verify_N
from .crystal_graph import CrystalGraph, check_external_criterion, i_string
from .e2 import CORRECTED, E2Context, s_closed
from .membership import s_of_m
from .root_system import HighestWeight, defect_of, hub_of, reflect


def dominant_weights(e: int, max_level: int):
    for r in range(1, max_level + 1):
        for cut in itertools.combinations(range(r + e - 1), e - 1):
            yield HighestWeight.of(*(b - a - 1 for a, b in zip((-1, *cut), (*cut, r + e - 1))))


def string_profiles(graph: CrystalGraph):
    lam = graph.lam
    n, bad = 0, []
    for c in graph.vertices:
        for i in range(lam.e):
            s = i_string(graph, c, i)
            top = s[0]
            w = hub_of(lam, top)[i]
            base = defect_of(lam, top)
            got = [defect_of(lam, x) for x in s]
            want = [base + k * (w - k) for k in range(w + 1)]
            n += 1
            if got != want or s[-1] != reflect(lam, top, i):
                bad.append({"content": list(c), "residue": i, "defects": got, "expected": want})
    for i, ai in enumerate(lam.a):
        got = [defect_of(lam, tuple(k * (j == i) for j in range(lam.e))) for k in range(ai + 1)]
        n += 1
        if got != [k * (ai - k) for k in range(ai + 1)]:
            bad.append({"from_highest": True, "residue": i, "defects": got})
    return n, bad


def external_criterion(graph: CrystalGraph):
    bad = check_external_criterion(graph)
    return len(graph.vertices) * graph.lam.e, [
        {"content": list(v.content), "residue": v.residue, "hub": list(v.hub), "defect": v.defect}
        for v in bad]


def closed_form(ctx: E2Context, m_range: range, variant: str = CORRECTED):
    bad = []
    for m in m_range:
        got, want = s_closed(ctx, m, variant), s_of_m(ctx.weight, (m,)).s
        if got != want:
            bad.append({"weight": [ctx.a0, ctx.a1], "m": m, "variant": variant,
                        "closed": got, "oracle": want, "content": [got, got + m]})
    return len(m_range), bad


def region_soundness(lam: HighestWeight, defects):
    bad = []
    for d in defects:
        rep = region_points(lam, d)
        bad += [{"weight": list(lam.a), "d": d, "m": list(m)} for m in rep.shell_violations]
    return len(defects), bad


def bound_agreement(lam: HighestWeight, graph: CrystalGraph, defects):
    """verify_N against sharp_N for the defects the graph is deep enough to certify."""
    n, bad = 0, []
    for d in defects:
        N = sharp_N(lam, d)
        if graph.max_degree < N - 1:
            continue
        n += 1
        res = verify_N(graph, d, N)
        if not res.passed:
            bad.append({"weight": list(lam.a), "d": d, "N": N,
                        "violations": [list(c) for c in res.violations],
                        "witness": list(res.witness) if res.witness else None})
    return n, bad
