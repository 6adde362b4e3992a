#!/usr/bin/env python3
"""Regenerate graph6 fixtures used by the tests and the cage table.

Requires networkx. Output is written next to the test sources and into the
embedded fixture header; both are checked in, so this only needs to run when
the fixture set changes.
"""
import networkx as nx
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent


def g6(G):
    return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(G), header=False).decode().strip()


cages = {
    3: nx.complete_graph(4),
    4: nx.complete_bipartite_graph(3, 3),
    5: nx.petersen_graph(),
    6: nx.heawood_graph(),
    7: nx.LCF_graph(24, [12, 7, -7], 8),
    8: nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5),
    10: nx.LCF_graph(70, [-29, -19, -13, 13, 21, -27, 27, 33, -13, 13, 19, -21, -33, 29], 5),
    12: nx.LCF_graph(126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17], 7),
}
names = {3: "K4", 4: "K3,3", 5: "Petersen", 6: "Heawood", 7: "McGee", 8: "Tutte-Coxeter",
         10: "Harries", 12: "Tutte 12-cage (Benson)"}
entries = []
for girth, G in cages.items():
    assert nx.girth(G) == girth and all(d == 3 for _, d in G.degree())
    print(f"cage 3,{girth}: n={G.number_of_nodes()} m={G.number_of_edges()}")
    entries.append(f'    {{{girth}, "{names[girth]}",\n     R"g6({g6(G)})g6"}},')

source = root / "core" / "src" / "cage_fixtures.cpp"
text = source.read_text()
head, rest = text.split("  static const std::vector<CageFixture> fixtures = {\n", 1)
_, tail = rest.split("\n  };\n", 1)
source.write_text(head + "  static const std::vector<CageFixture> fixtures = {\n" + "\n".join(entries) + "\n  };\n" + tail)

census = [G for G in nx.graph_atlas_g() if 1 <= G.number_of_nodes() <= 6 and nx.is_connected(G)]
with open(root / "tests" / "data" / "connected_le6.g6", "w") as f:
    for G in census:
        f.write(g6(G) + "\n")
print("census", len(census), sum(1 for G in census if G.number_of_nodes() == 6))
