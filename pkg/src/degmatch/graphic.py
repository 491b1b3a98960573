"""Classical feasibility checks and the matching/f-factor kernel.

This module powers every independent oracle in the package: the
Erdos-Gallai inequality test, a deterministic Havel-Hakimi realizer, the
Lovasz perfect-matching feasibility test, an unweighted blossom maximum
matching, and exact f-factor search via the vertex-gadget reduction to
perfect matching.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import deque
from typing import Sequence

from .core import CheckReport, CheckRow, DegreeSequence, LabeledGraph, Matching
from .errors import InvalidInput, InvariantViolation, NotGraphicError


def _capped_tail_sum(
    vals: Sequence[int],
    neg_vals: list[int],
    suffix: list[int],
    start: int,
    cap: int,
) -> int:
    """Sum of min(vals[i], cap) over i in [start, len(vals)).

    vals must be weakly decreasing; neg_vals is [-v for v in vals] (ascending)
    and suffix[i] = sum(vals[i:]).  Entries may be negative; they are used
    as-is (min with a nonnegative cap keeps them).
    """
    n = len(vals)
    if start >= n:
        return 0
    ge = bisect_right(neg_vals, -cap)  # number of entries >= cap
    capped = max(0, ge - start)
    tail = max(start, ge)
    return cap * capped + suffix[tail]


def _prepare(entries: Sequence[int], shift: int) -> tuple[list[int], list[int], list[int]]:
    vals = [d - shift for d in entries]
    neg = [-v for v in vals]
    suffix = [0] * (len(vals) + 1)
    for i in range(len(vals) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + vals[i]
    return vals, neg, suffix


def _eg_rows(entries: Sequence[int]) -> tuple[CheckRow, ...]:
    """Erdos-Gallai rows for a weakly decreasing, non-negative sequence."""
    n = len(entries)
    _, neg, suffix = _prepare(entries, 0)
    rows = []
    lhs = 0
    for k in range(1, n + 1):
        lhs += entries[k - 1]
        rhs = k * (k - 1) + _capped_tail_sum(entries, neg, suffix, k, k)
        rows.append(CheckRow(k, lhs, rhs))
    return tuple(rows)


def eg_check(seq: DegreeSequence) -> CheckReport:
    """Erdos-Gallai test: graphic iff the degree sum is even and every row holds."""
    rows = _eg_rows(seq.entries)
    return CheckReport(
        family="EG",
        rows=rows,
        parity_ok=seq.total() % 2 == 0,
        structural_ok=True,
    )


def _eg_passes(entries: Sequence[int]) -> bool:
    """Verdict-only EG test for weakly decreasing non-negative entries."""
    if sum(entries) % 2:
        return False
    _, neg, suffix = _prepare(entries, 0)
    lhs = 0
    for k in range(1, len(entries) + 1):
        lhs += entries[k - 1]
        if lhs > k * (k - 1) + _capped_tail_sum(entries, neg, suffix, k, k):
            return False
    return True


def hh_realize(seq: DegreeSequence) -> LabeledGraph:
    """Deterministic Havel-Hakimi realization.

    Repeatedly exhausts the vertex with the largest residual degree by
    connecting it to the vertices with the next-largest residuals; all ties
    break towards the smallest label, so the output edge set is a function
    of the input sequence alone.
    """
    report = eg_check(seq)
    if not report.verdict:
        raise NotGraphicError(f"{seq} is not graphic")
    n = seq.n
    residual = list(seq.entries)
    edges: set[tuple[int, int]] = set()
    for _ in range(n):
        # order: largest residual first, then smallest label
        order = sorted(range(1, n + 1), key=lambda v: (-residual[v - 1], v))
        u = order[0]
        need = residual[u - 1]
        if need == 0:
            break
        targets = [v for v in order[1:] if residual[v - 1] > 0][:need]
        if len(targets) < need:
            raise InvariantViolation(
                f"Havel-Hakimi ran out of targets for {seq}"
            )
        residual[u - 1] = 0
        for v in targets:
            residual[v - 1] -= 1
            edges.add((u, v) if u < v else (v, u))
    if any(residual):
        raise InvariantViolation(f"Havel-Hakimi left residual degrees for {seq}")
    g = LabeledGraph(n, frozenset(edges))
    if g.degree_vector() != seq.entries:
        raise InvariantViolation("Havel-Hakimi degree audit failed")
    return g


def lovasz_pm_check(seq: DegreeSequence) -> bool:
    """Whether some realization of the sequence contains a perfect matching.

    True iff n is even and both the sequence and its pointwise decrement are
    graphic.  The decremented sequence may contain zeros; the Erdos-Gallai
    test applies to it verbatim.
    """
    if seq.n % 2:
        return False
    return _eg_passes(seq.entries) and _eg_passes(seq.decremented())


# ---------------------------------------------------------------------------
# Unweighted maximum matching in general graphs (blossom contraction).
# Array-based BFS formulation; all scratch state is per-invocation.
# ---------------------------------------------------------------------------


def _greedy_matching(adj: list[list[int]], match: list[int]) -> None:
    for v in range(len(adj)):
        if match[v] < 0:
            for u in adj[v]:
                if match[u] < 0:
                    match[v] = u
                    match[u] = v
                    break


def _find_and_augment(n: int, adj: list[list[int]], match: list[int], root: int) -> bool:
    """Grow an alternating tree from `root`; augment if an exposed vertex is hit."""
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom at the common base
                cur_base = lca(v, to)
                in_blossom = [False] * n
                mark_path(v, cur_base, to, in_blossom)
                mark_path(to, cur_base, v, in_blossom)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # augment along the alternating path back to the root
                    u = to
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _max_matching_raw(n: int, adj: list[list[int]]) -> list[int]:
    match = [-1] * n
    _greedy_matching(adj, match)
    for v in range(n):
        if match[v] < 0:
            _find_and_augment(n, adj, match, v)
    # certification pass: one more scan over every exposed vertex must find
    # no augmenting path, which by Berge's lemma certifies maximality
    for v in range(n):
        if match[v] < 0 and _find_and_augment(n, adj, match, v):
            raise InvariantViolation("matching was not maximum after main loop")
    return match


def max_matching(g: LabeledGraph) -> Matching:
    """A maximum-cardinality matching of g (deterministic)."""
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in g.edge_list():
        adj[i - 1].append(j - 1)
        adj[j - 1].append(i - 1)
    match = _max_matching_raw(n, adj)
    edges = frozenset(
        (v + 1, match[v] + 1) for v in range(n) if match[v] > v
    )
    return Matching(n, edges)


# ---------------------------------------------------------------------------
# Exact f-factor via the classical vertex-gadget reduction.
# ---------------------------------------------------------------------------


def f_factor(host: LabeledGraph, f: Sequence[int]) -> LabeledGraph | None:
    """A spanning subgraph of `host` with degree exactly f(v) at every v, or None.

    Each vertex v becomes deg(v) edge-ports plus deg(v)-f(v) core-ports with
    a complete bipartite gadget between them; every host edge joins one port
    of each endpoint.  Perfect matchings of the gadget correspond one-to-one
    to f-factors.  Ports are numbered along the sorted edge list, so the
    output is deterministic.
    """
    n = host.n
    if len(f) != n:
        raise InvalidInput(f"f has length {len(f)}, expected {n}")
    degs = host.degree_vector()
    for v in range(1, n + 1):
        fv = f[v - 1]
        if fv < 0 or fv > degs[v - 1]:
            raise InvalidInput(
                f"target degree f({v})={fv} outside [0, deg={degs[v - 1]}]"
            )
    if sum(f) % 2:
        return None  # odd degree total: no subgraph can realize it

    edge_list = host.edge_list()
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for e in edge_list:
        incident[e[0]].append(e)
        incident[e[1]].append(e)

    # port ids: for each vertex, edge-ports in sorted-edge order, then cores
    edge_port: dict[tuple[tuple[int, int], int], int] = {}
    port_ranges: list[tuple[int, int]] = [(0, 0)] * (n + 1)
    core_ranges: list[tuple[int, int]] = [(0, 0)] * (n + 1)
    node_count = 0
    for v in range(1, n + 1):
        start = node_count
        for e in incident[v]:
            edge_port[(e, v)] = node_count
            node_count += 1
        port_ranges[v] = (start, node_count)
        cstart = node_count
        node_count += degs[v - 1] - f[v - 1]
        core_ranges[v] = (cstart, node_count)

    adj: list[list[int]] = [[] for _ in range(node_count)]
    for v in range(1, n + 1):
        ps, pe = port_ranges[v]
        cs, ce = core_ranges[v]
        for p in range(ps, pe):
            for c in range(cs, ce):
                adj[p].append(c)
                adj[c].append(p)
    for e in edge_list:
        pu, pv = edge_port[(e, e[0])], edge_port[(e, e[1])]
        adj[pu].append(pv)
        adj[pv].append(pu)

    match = _max_matching_raw(node_count, adj)
    if any(m < 0 for m in match):
        return None
    chosen = frozenset(
        e for e in edge_list if match[edge_port[(e, e[0])]] == edge_port[(e, e[1])]
    )
    out = LabeledGraph(n, chosen)
    if out.degree_vector() != tuple(f):
        raise InvariantViolation("f-factor gadget produced wrong degrees")
    return out
