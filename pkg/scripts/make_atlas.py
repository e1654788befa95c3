"""Regenerate src/bondage_bounds/data/atlas_n1_7.g6 from the networkx graph atlas.

The atlas lists every graph on 0..7 vertices up to isomorphism (1253 graphs);
the null graph is dropped.  Run once; the output is committed.
"""

from pathlib import Path

from networkx.generators.atlas import graph_atlas_g

from bondage_bounds.graph_core import Graph, to_graph6

OUT = Path(__file__).resolve().parents[1] / "src" / "bondage_bounds" / "data" / "atlas_n1_7.g6"


def main() -> None:
    lines = []
    for nxg in graph_atlas_g():
        if nxg.number_of_nodes() == 0:
            continue
        g = Graph.from_edges(nxg.number_of_nodes(), nxg.edges())
        lines.append(to_graph6(g))
    OUT.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()
