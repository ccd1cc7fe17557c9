"""Rendering of tables, graphs, regions and bound reports as CSV / JSON / DOT / text.

Every renderer returns a string; identical inputs give identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .crystal_graph import CrystalGraph


def fmt_hub(h: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in h) + "]"


def fmt_content(c: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


def fmt_m(m) -> str:
    if isinstance(m, int):
        return str(m)
    return str(m[0]) if len(m) == 1 else fmt_content(m)


TABLE_COLUMNS = ("m", "hub", "defect", "content", "degree")


def table_records(rows) -> list[dict]:
    """rows: objects with m, hub, defect, content, degree attributes."""
    return [{"m": fmt_m(r.m), "hub": fmt_hub(r.hub), "defect": r.defect,
             "content": fmt_content(r.content), "degree": r.degree} for r in rows]


def render_csv(records: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\r\n")
    w.writeheader()
    for rec in records:
        w.writerow({k: "" if rec.get(k) is None else rec[k] for k in columns})
    return buf.getvalue()


def render_text(records: Sequence[dict], columns: Sequence[str]) -> str:
    cells = [[str(c) for c in columns]]
    cells += [["" if rec.get(c) is None else str(rec[c]) for c in columns] for rec in records]
    widths = [max(len(row[k]) for row in cells) for k in range(len(columns))]
    lines = ["  ".join(s.rjust(w) if k < len(widths) - 1 else s
                       for k, (s, w) in enumerate(zip(row, widths))).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, default=_json_default) + "\n"


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def render_table(rows, fmt: str) -> str:
    records = table_records(rows)
    if fmt == "csv":
        return render_csv(records, TABLE_COLUMNS)
    if fmt == "json":
        return render_json(records)
    if fmt == "text":
        return render_text(records, TABLE_COLUMNS)
    raise ValueError(f"format {fmt!r} not available for tables")


def e2_transposed(rows) -> str:
    """m across the top, one line per invariant, as in the usual presentation."""
    recs = table_records(rows)
    head = ["m"] + [r["m"] for r in recs]
    body = [[name.capitalize()] + [str(r[name]) for r in recs] for name in TABLE_COLUMNS[1:]]
    widths = [max(len(row[k]) for row in [head, *body]) for k in range(len(head))]
    return "".join(" | ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip() + "\n"
                   for row in [head, *body])


# graphs

def graph_dict(graph: CrystalGraph) -> dict:
    return {
        "e": graph.lam.e,
        "weight": list(graph.lam.a),
        "max_degree": graph.max_degree,
        "vertices": [{"content": list(c), "hub": list(v.hub), "defect": v.defect,
                      "degree": v.degree} for c, v in sorted(graph.vertices.items())],
        "edges": [{"from": list(c), "to": [x + (k == i) for k, x in enumerate(c)],
                   "residue": i} for c, i in sorted(graph.edges)],
    }


def _node_id(c) -> str:
    return '"' + ",".join(str(x) for x in c) + '"'


def graph_dot(graph: CrystalGraph) -> str:
    """Directed graph ranked by degree, highest weight on top, edges pointing down."""
    lines = ["digraph crystal {", "  rankdir=TB;", "  node [shape=record, fontsize=10];"]
    lines.append(f'  label="e={graph.lam.e} weight={fmt_hub(graph.lam.a)} '
                 f'degree<={graph.max_degree}";')
    for deg, shell in sorted(graph.by_degree().items()):
        lines.append(f"  subgraph deg{deg} {{")
        lines.append("    rank=same;")
        for c in sorted(shell):
            v = graph.vertices[c]
            label = f"{fmt_content(c)}|{fmt_hub(v.hub)}|{v.defect}"
            lines.append(f'    {_node_id(c)} [label="{label}"];')
        lines.append("  }")
    for c, i in sorted(graph.edges):
        to = tuple(x + (k == i) for k, x in enumerate(c))
        lines.append(f'  {_node_id(c)} -> {_node_id(to)} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_text(graph: CrystalGraph) -> str:
    out = []
    for deg, shell in sorted(graph.by_degree().items()):
        cells = [f"{fmt_content(c)}{fmt_hub(graph.vertices[c].hub)}d{graph.vertices[c].defect}"
                 for c in sorted(shell)]
        out.append(f"{deg:>4}: " + "  ".join(cells))
    return "\n".join(out) + "\n"


def render_graph(graph: CrystalGraph, fmt: str) -> str:
    if fmt == "dot":
        return graph_dot(graph)
    if fmt == "json":
        return render_json(graph_dict(graph))
    if fmt == "text":
        return graph_text(graph)
    if fmt == "csv":
        recs = [{"content": fmt_content(c), "hub": fmt_hub(v.hub), "defect": v.defect,
                 "degree": v.degree} for c, v in sorted(graph.vertices.items())]
        return render_csv(recs, ("content", "hub", "defect", "degree"))
    raise ValueError(f"unknown format {fmt!r}")


# regions

def region_dict(lam, report) -> dict:
    def pt(p):
        return {"m": list(p.m), "s": p.max_weight.s, "content": list(p.content),
                "hub": list(p.hub), "defect": p.defect, "degree": p.degree}
    return {
        "e": lam.e,
        "weight": list(lam.a),
        "d": report.d,
        "simplex_corners": [[str(x) for x in c] for c in report.simplex_corners],
        "bounding_box": [list(b) for b in report.bounding_box],
        "points": [pt(p) for p in report.points],
        "boundary": [pt(p) for p in report.boundary],
        "shell_violations": [list(m) for m in report.shell_violations],
    }
