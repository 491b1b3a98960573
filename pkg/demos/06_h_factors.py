#!/usr/bin/env python3
"""Spanning h-regular factors and disjoint perfect matchings.

The canonical h-factor is the union of complete blocks K_{h+1} on
consecutive labels.  Its inequality family generalizes the matching one
(h = 1 reproduces it row for row).  Realizing the factor and merging blocks
pairwise yields h pairwise disjoint perfect matchings inside one graph.
"""
from degmatch import (
    DegreeSequence,
    SpanningFactor,
    build_graph,
    common_realizable_two_factors,
    disjoint_pms,
    doublestar_check,
    enumerate_realizations,
    enumerate_two_factors,
    hfactor_oracle,
    merge_cliques_with_witness,
    near_one_factorization,
    two_factor_realizable,
)

# The inequality family at work: two triangles are tight everywhere.
seq = DegreeSequence((2,) * 6)
report = doublestar_check(seq, 2)
print(f"{seq} with h=2: verdict {report.verdict}, "
      f"slacks {[r.slack for r in report.rows]}")
print(f"realization: {hfactor_oracle(seq, 2).edge_list()}\n")

# Odd cliques split into near-perfect matchings, one missing each vertex.
print("K_5 as five near-matchings (class r misses vertex r):")
for r, cls in enumerate(near_one_factorization(5), start=1):
    print(f"   class {r}: {sorted(cls.edges)}")

# Merging two triangles costs one switch and leaves a 6-cycle behind.
g = build_graph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])
merged, witness = merge_cliques_with_witness(g, (1, 2, 3), (4, 5, 6))
print(f"\ntwo triangles merged with {witness.switches} switch: {merged.edge_list()}")

# The full pipeline: a realization plus h disjoint perfect matchings.
for entries, h in (((2,) * 6, 2), ((3,) * 4, 3), ((4,) * 10, 4)):
    seq = DegreeSequence(entries)
    graph, pms = disjoint_pms(seq, h)
    print(f"{seq} h={h}: {len(pms)} disjoint perfect matchings")
    for m in pms:
        print(f"   {m}")

# A forced dense example: this sequence has exactly one realization, whose
# only 2-factor is a union of three 4-cycles.
seq = DegreeSequence((11, 11, 9, 9, 7, 7, 6, 6, 4, 4, 2, 2))
(graph,) = enumerate_realizations(seq)
(factor,) = enumerate_two_factors(graph)
print(f"\n{seq}: unique realization, unique 2-factor {factor.edge_list()}")

# Three sequences sharing exactly one realizable labelled 2-factor: the
# union of the 6-cycles 1-12-2-10-3-11 and 4-9-5-7-6-8.
trio = (
    DegreeSequence((11, 11, 10, 8, 8, 7, 6, 6, 5, 3, 3, 2)),
    DegreeSequence((11, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2)),
    DegreeSequence((11, 11, 10, 8, 6, 6, 6, 5, 5, 3, 3, 2)),
)
common = common_realizable_two_factors(trio)
print(f"\n2-factors realizable by all three listed sequences: {len(common)}")
for tf in common:
    print(f"   {tf.edge_list()}")
    print(f"   realizable by each: "
          f"{[two_factor_realizable(s, tf) for s in trio]}")
