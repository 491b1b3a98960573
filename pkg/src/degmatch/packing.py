"""Edge-disjoint packing of two graphic sequences, plus binding-number diagnostics.

pack realizes the first sequence greedily and then searches the complement
for an exact factor carrying the second sequence's degrees.  When the
product of the two maximum degrees is below n/2 the construction provably
succeeds for any first realization, so a miss under that hypothesis is
surfaced as an invariant violation rather than returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DegreeSequence, LabeledGraph
from .errors import InvalidInput, InvariantViolation, PreconditionError
from .graphic import eg_check, f_factor, hh_realize

BINDING_LIMIT = 24  # exhaustive subset scan; exponential by design at desk scale


@dataclass(frozen=True)
class BindingNumber:
    value: Fraction
    witness: frozenset[int]


def binding_number(g: LabeledGraph) -> BindingNumber:
    """min |N(X)| / |X| over non-empty X with N(X) != V, as an exact fraction.

    The witness is the first strict minimizer in mask enumeration order.
    """
    n = g.n
    if n > BINDING_LIMIT:
        raise InvalidInput(f"binding number scan is limited to n <= {BINDING_LIMIT}")
    masks = [0] * (n + 1)
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    full = ((1 << n) - 1) << 1  # bits 1..n
    # neighborhood[x] for all subsets, built by peeling the lowest vertex
    neigh = [0] * (1 << n)
    for x in range(1, 1 << n):
        low = x & -x
        v = low.bit_length()  # subset bits are 0-based shifts of vertex-1
        neigh[x] = neigh[x ^ low] | masks[v]
    best: Fraction | None = None
    best_x = 0
    for x in range(1, 1 << n):
        nx = neigh[x]
        if nx == full:
            continue
        ratio = Fraction(bin(nx).count("1"), bin(x).count("1"))
        if best is None or ratio < best:
            best = ratio
            best_x = x
    if best is None:
        raise InvalidInput("binding number undefined: N(X) = V for every X")
    witness = frozenset(
        v for v in range(1, n + 1) if (best_x >> (v - 1)) & 1
    )
    return BindingNumber(value=best, witness=witness)


def _packs_hypothesis(seq1: DegreeSequence, seq2: DegreeSequence) -> bool:
    return 2 * seq1.entries[0] * seq2.entries[0] < seq1.n


def pack(
    seq1: DegreeSequence, seq2: DegreeSequence
) -> tuple[LabeledGraph, LabeledGraph] | None:
    """Edge-disjoint realizations of the two sequences on shared labels, or None.

    Vertex i carries degree d_i^1 in the first graph and d_i^2 in the second.
    The larger-max-degree sequence is realized first (a determinism choice;
    the output order always matches the argument order).  If the product
    hypothesis d_1^1 * d_1^2 < n/2 holds, failure to pack is impossible, so
    None is never returned in that regime.
    """
    n = seq1.n
    if seq2.n != n:
        raise InvalidInput("sequences must have equal length")
    if n < 3:
        raise PreconditionError(f"packing needs n >= 3, got {n}")
    for seq in (seq1, seq2):
        if not eg_check(seq).verdict:
            raise PreconditionError(f"{seq} is not graphic")

    swapped = seq2.entries[0] > seq1.entries[0]
    first, second = (seq2, seq1) if swapped else (seq1, seq2)
    g1 = hh_realize(first)
    complement = g1.complement()
    caps = complement.degree_vector()
    if all(second.entries[i] <= caps[i] for i in range(n)):
        g2 = f_factor(complement, second.entries)
    else:
        g2 = None
    if g2 is None:
        if _packs_hypothesis(seq1, seq2):
            raise InvariantViolation(
                f"packing of {seq1} and {seq2} failed under the degree-product hypothesis"
            )
        return None
    if g1.edges & g2.edges:
        raise InvariantViolation("packed graphs share an edge")
    return (g2, g1) if swapped else (g1, g2)


def pack_report(seq1: DegreeSequence, seq2: DegreeSequence) -> dict:
    """JSON-ready packing outcome, flagging inconclusive misses."""
    hypothesis = _packs_hypothesis(seq1, seq2)
    result = pack(seq1, seq2)
    report = {
        "pi1": list(seq1.entries),
        "pi2": list(seq2.entries),
        "hypothesis": hypothesis,
        "success": result is not None,
        "edges1": None,
        "edges2": None,
    }
    if result is not None:
        report["edges1"] = [list(e) for e in result[0].edge_list()]
        report["edges2"] = [list(e) for e in result[1].edge_list()]
    else:
        report["note"] = (
            "hypothesis not met; absence is inconclusive "
            "(a different first realization might pack)"
        )
    return report
