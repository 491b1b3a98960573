#!/usr/bin/env python3
"""The realizability preorder on perfect matchings.

Write N <= M when every degree sequence that can realize M can also realize
N.  The nested matching is the unique minimum and the consecutive-pairs
matching the unique maximum; in between the relation is genuinely partial
from 6 vertices on.  Antisymmetry and "comparable implies switch-reachable"
are open questions, so the table exposes a counterexample scan instead of
asserting them.
"""
from degmatch import Matching, build_preorder, check_conjectures, hasse_dot

table = build_preorder(4)
print("4 vertices: which sequences realize which matchings")
header = "  ".join(str(m) for m in table.matchings)
print(f"   {'sequence':12s} {header}")
for seq, row in zip(table.sequences, table.realizable):
    cells = "        ".join("x" if hit else "." for hit in row)
    print(f"   {str(seq):12s} {cells}")
print("-> a total order: 1-4,2-3  <=  1-3,2-4  <=  1-2,3-4\n")

table6 = build_preorder(6)
print(f"6 vertices: {len(table6.matchings)} matchings, "
      f"{len(table6.sequences)} feasible sequences")
a = Matching(6, {(1, 6), (2, 4), (3, 5)})
b = Matching(6, {(1, 5), (2, 6), (3, 4)})
ia = table6.matchings.index(a)
ib = table6.matchings.index(b)
print(f"   {a} <= {b}? {table6.leq[ia][ib]}")
print(f"   {b} <= {a}? {table6.leq[ib][ia]}")
print("   (witnesses: (5,3,3,3,3,1) realizes only the former, "
      "(5,5,3,3,2,2) only the latter)\n")

report = check_conjectures(table6)
print(f"antisymmetry holds at n=6: {report.antisymmetry_holds}")
print(f"switch-converse holds at n=6: {report.switch_converse_holds}\n")

print("Hasse diagram of the quotient (render with graphviz `dot -Tpng`):")
print(hasse_dot(table6))
