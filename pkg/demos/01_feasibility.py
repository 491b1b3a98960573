#!/usr/bin/env python3
"""Feasibility checks: which degree sequences are graphic, which can realize
a perfect matching, and which can realize the consecutive-pairs matching
{(1,2),(3,4),...}.

Every check returns a CheckReport with one row per prefix length k, so you
can see exactly where a sequence fails and by how much.
"""
from degmatch import DegreeSequence, eg_check, lovasz_pm_check, star_check


def show(report, label):
    print(f"{label}: {'pass' if report.verdict else 'fail'}")
    for row in report.rows:
        marker = "  <-- fails" if row.slack < 0 else ""
        print(f"   k={row.k}: lhs={row.lhs} rhs={row.rhs} slack={row.slack}{marker}")


# A classic graphic sequence: the complete graph on 4 vertices minus an edge.
seq = DegreeSequence((3, 3, 2, 2))
show(eg_check(seq), f"graphic {seq}")

# (3,3,3,1) is not graphic: three vertices of degree 3 need each other and
# a fourth neighbour, but vertex 4 can serve only one of them.
show(eg_check(DegreeSequence((3, 3, 3, 1))), "graphic (3,3,3,1)")

# Realizing a perfect matching needs more: both the sequence and its
# pointwise decrement must be graphic (and n must be even).
for entries in [(3, 3, 2, 2), (3, 2, 2, 1), (2, 1, 1, 1, 1)]:
    seq = DegreeSequence(entries)
    print(f"perfect matching realizable {seq}: {lovasz_pm_check(seq)}")

# The consecutive-pairs matching is the hardest one to realize.  (3,2,2,1)
# can realize a perfect matching, but not that one: vertex 1 would need
# degree <= 2 once the pair (1,2) is forced.
print()
show(star_check(DegreeSequence((3, 2, 2, 1))), "consecutive-pairs (3,2,2,1)")
show(star_check(DegreeSequence((2, 2, 2, 2))), "consecutive-pairs (2,2,2,2)")
