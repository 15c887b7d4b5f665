"""Spectral irreducibility, controllability, and graph symmetry.

Over all simple graphs on a few vertices we cross-check the implications:
an irreducible characteristic polynomial forces (minimal) controllability
with the all-ones input, and controllability forces a trivial automorphism
group.  Both ranks and automorphism counts are computed exactly.
"""
from polylab import Graph, godsil_cross_check
from polylab.control import all_graphs

for n in (4, 5):
    stats = {"controllable": 0, "irreducible": 0, "asymmetric": 0,
             "violation": 0, "total": 0}
    for g in all_graphs(n):
        report = godsil_cross_check(g)
        stats["total"] += 1
        stats["controllable"] += report["controllable"]
        stats["irreducible"] += report["irreducibility"] == "irreducible"
        stats["asymmetric"] += report["automorphisms"] == 1
        stats["violation"] += report["verdict"] == "violation"
    print(f"n={n}: {stats['total']} graphs, "
          f"{stats['irreducible']} irreducible charpoly, "
          f"{stats['controllable']} controllable, "
          f"{stats['asymmetric']} asymmetric, "
          f"{stats['violation']} implication violations")

print("\nthe path on three vertices is the classic non-example:")
p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
report = godsil_cross_check(p3)
print(f"  charpoly z^3 - 2z, controllable={report['controllable']}, "
      f"automorphisms={report['automorphisms']}")
