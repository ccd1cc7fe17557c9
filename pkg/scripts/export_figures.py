"""Write DOT files for the two standard reduced crystals; render with ``dot -Tpdf``."""
import argparse
from pathlib import Path

from crystalbounds import HighestWeight, enumerate_graph
from crystalbounds.reports import graph_dot

FIGURES = {
    "crystal_e3_111.dot": ((1, 1, 1), 6),
    "crystal_e2_21.dot": ((2, 1), 10),
}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("outdir", nargs="?", default="figures")
    args = p.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, (a, depth) in FIGURES.items():
        g = enumerate_graph(HighestWeight.of(*a), depth)
        (out / name).write_text(graph_dot(g))
        print(f"{out / name}: {len(g.vertices)} vertices, {len(g.edges)} edges")


if __name__ == "__main__":
    main()
