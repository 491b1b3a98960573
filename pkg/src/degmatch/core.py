"""Core domain objects: degree sequences, labelled graphs, matchings, factors.

Vertices are labelled 1..n throughout the package and degree sequences are
weakly decreasing, so label i always carries the i-th largest degree.  All
objects are immutable after construction; every operation returns new values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal

from .errors import InvalidInput


@dataclass(frozen=True)
class DegreeSequence:
    """A weakly decreasing vector of vertex degrees d_1 >= ... >= d_n >= 1.

    Entries are capped at n-1 so the sequence can belong to a simple graph.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(d) for d in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n < 1:
            raise InvalidInput("degree sequence must be non-empty")
        for i, d in enumerate(entries):
            if not 1 <= d <= n - 1:
                raise InvalidInput(
                    f"degree d_{i + 1}={d} outside [1, n-1] for n={n}"
                )
            if i and entries[i - 1] < d:
                raise InvalidInput("degree sequence must be weakly decreasing")

    @property
    def n(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries)

    def decremented(self, amount: int = 1) -> tuple[int, ...]:
        """Entries minus `amount`, as a plain tuple (may contain zeros)."""
        return tuple(d - amount for d in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.entries) + ")"


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on the vertex set {1, ..., n}.

    Edges are stored as pairs (i, j) with i < j.  The canonical edge order
    used everywhere (serialization, determinism of algorithms) is the
    lexicographic order of these pairs.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInput("graph needs at least one vertex")
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, j in edges:
            if i == j:
                raise InvalidInput(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise InvalidInput(f"edge ({i},{j}) out of range for n={self.n}")

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def degree_vector(self) -> tuple[int, ...]:
        return tuple(len(self._adjacency[v]) for v in range(1, self.n + 1))

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def replace_edges(
        self,
        remove: Iterable[tuple[int, int]] = (),
        add: Iterable[tuple[int, int]] = (),
    ) -> "LabeledGraph":
        """Functional update; removed edges must exist, added must not."""
        es = set(self.edges)
        for u, v in remove:
            e = _normalize_edge(u, v)
            if e not in es:
                raise InvalidInput(f"cannot remove absent edge {e}")
            es.remove(e)
        for u, v in add:
            e = _normalize_edge(u, v)
            if e in es:
                raise InvalidInput(f"cannot add existing edge {e}")
            es.add(e)
        return LabeledGraph(self.n, frozenset(es))

    def complement(self) -> "LabeledGraph":
        full = {(i, j) for i in range(1, self.n) for j in range(i + 1, self.n + 1)}
        return LabeledGraph(self.n, frozenset(full - self.edges))

    def __str__(self) -> str:
        return f"graph(n={self.n}, edges={self.edge_list()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
    """Build a simple graph, rejecting loops, duplicates and bad labels."""
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise InvalidInput(f"loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidInput(f"edge ({u},{v}) out of range for n={n}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise InvalidInput(f"duplicate edge {e}")
        seen.add(e)
    return LabeledGraph(n, frozenset(seen))


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(
        n,
        frozenset(
            (i, j) for i in range(1, n) for j in range(i + 1, n + 1)
        ),
    )


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges on {1, ..., n}."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInput("matching needs at least one vertex")
        edges = frozenset(
            _normalize_edge(int(a), int(b)) for a, b in self.edges
        )
        object.__setattr__(self, "edges", edges)
        seen: set[int] = set()
        for i, j in edges:
            if i == j:
                raise InvalidInput(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise InvalidInput(f"edge ({i},{j}) out of range for n={self.n}")
            if i in seen or j in seen:
                raise InvalidInput(f"edge ({i},{j}) overlaps another matching edge")
            seen.add(i)
            seen.add(j)

    @cached_property
    def _partner(self) -> dict[int, int]:
        p: dict[int, int] = {}
        for i, j in self.edges:
            p[i] = j
            p[j] = i
        return p

    def partner(self, v: int) -> int | None:
        return self._partner.get(v)

    def covered(self) -> frozenset[int]:
        return frozenset(self._partner)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.n

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def apply_move(self, move: "SwitchMove") -> "Matching":
        """Forward application: remove move.removed(), add move.added()."""
        removed = set(move.removed())
        added = set(move.added())
        if not removed <= self.edges:
            raise InvalidInput(f"move {move} removes edges not in the matching")
        if added & self.edges:
            raise InvalidInput(f"move {move} adds edges already present")
        return Matching(self.n, (self.edges - removed) | added)

    def __str__(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.sorted_edges())


@dataclass(frozen=True)
class SpanningFactor:
    """A spanning h-regular subgraph of the complete graph on {1, ..., n}."""

    n: int
    h: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        edges = frozenset(_normalize_edge(int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        deg = [0] * (self.n + 1)
        for i, j in edges:
            if not (1 <= i < j <= self.n):
                raise InvalidInput(f"edge ({i},{j}) out of range for n={self.n}")
            deg[i] += 1
            deg[j] += 1
        bad = [v for v in range(1, self.n + 1) if deg[v] != self.h]
        if bad:
            raise InvalidInput(
                f"not {self.h}-regular: vertices {bad} have wrong degree"
            )

    def to_graph(self) -> LabeledGraph:
        return LabeledGraph(self.n, self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


# Switch type tables.  A switch acts on four vertices w < x < y < z and
# replaces one pairing of them by another:
#   type 1:  {(w,x),(y,z)} -> {(w,y),(x,z)}
#   type 2:  {(w,y),(x,z)} -> {(w,z),(x,y)}
#   type 3:  {(w,x),(y,z)} -> {(w,z),(x,y)}
_SWITCH_TABLE = {
    1: (((0, 1), (2, 3)), ((0, 2), (1, 3))),
    2: (((0, 2), (1, 3)), ((0, 3), (1, 2))),
    3: (((0, 1), (2, 3)), ((0, 3), (1, 2))),
}


@dataclass(frozen=True)
class SwitchMove:
    """A typed 4-vertex exchange acting on a matching."""

    w: int
    x: int
    y: int
    z: int
    kind: int

    def __post_init__(self) -> None:
        if not self.w < self.x < self.y < self.z:
            raise InvalidInput("switch vertices must satisfy w < x < y < z")
        if self.kind not in (1, 2, 3):
            raise InvalidInput(f"unknown switch type {self.kind}")

    def _verts(self) -> tuple[int, int, int, int]:
        return (self.w, self.x, self.y, self.z)

    def removed(self) -> tuple[tuple[int, int], tuple[int, int]]:
        v = self._verts()
        (a, b), (c, d) = _SWITCH_TABLE[self.kind][0]
        return ((v[a], v[b]), (v[c], v[d]))

    def added(self) -> tuple[tuple[int, int], tuple[int, int]]:
        v = self._verts()
        (a, b), (c, d) = _SWITCH_TABLE[self.kind][1]
        return ((v[a], v[b]), (v[c], v[d]))

    def __str__(self) -> str:
        return f"switch{self.kind}({self.w},{self.x},{self.y},{self.z})"


@dataclass(frozen=True)
class CheckRow:
    k: int
    lhs: int
    rhs: int

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class CheckReport:
    """Per-k ledger for one of the inequality families (EG, STAR, DOUBLESTAR).

    verdict <=> parity_ok and structural_ok and all slacks >= 0.
    first_fail_k is set exactly when some inequality row fails.
    """

    family: str
    rows: tuple[CheckRow, ...]
    parity_ok: bool
    structural_ok: bool
    h: int | None = None

    @property
    def failing_ks(self) -> tuple[int, ...]:
        return tuple(r.k for r in self.rows if r.slack < 0)

    @property
    def first_fail_k(self) -> int | None:
        fails = self.failing_ks
        return fails[0] if fails else None

    @property
    def verdict(self) -> bool:
        return self.parity_ok and self.structural_ok and not self.failing_ks

    def row(self, k: int) -> CheckRow:
        return self.rows[k - 1]

    def min_slack(self) -> int:
        return min(r.slack for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "family": self.family if self.h is None else f"{self.family}({self.h})",
            "verdict": self.verdict,
            "parity_ok": self.parity_ok,
            "structural_ok": self.structural_ok,
            "first_fail_k": self.first_fail_k,
            "failing_ks": list(self.failing_ks),
            "rows": [
                {"k": r.k, "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack}
                for r in self.rows
            ],
        }


def canonical_matching(n: int, which: Literal["plus", "minus"]) -> Matching:
    """The consecutive-pairs matching ("plus") or the nested one ("minus").

    plus  = {(1,2), (3,4), ..., (n-1,n)}
    minus = {(1,n), (2,n-1), ..., (n/2, n/2+1)}
    """
    if n < 2 or n % 2:
        raise InvalidInput(f"perfect matchings need even n >= 2, got {n}")
    if which == "plus":
        edges = [(2 * i - 1, 2 * i) for i in range(1, n // 2 + 1)]
    elif which == "minus":
        edges = [(i, n + 1 - i) for i in range(1, n // 2 + 1)]
    else:
        raise InvalidInput(f"which must be 'plus' or 'minus', got {which!r}")
    return Matching(n, frozenset(edges))


def canonical_h_factor(n: int, h: int) -> SpanningFactor:
    """Disjoint complete blocks K_{h+1} on consecutive label intervals."""
    if h < 1:
        raise InvalidInput(f"regularity h must be >= 1, got {h}")
    if n % (h + 1):
        raise InvalidInput(f"(h+1)={h + 1} must divide n={n}")
    edges: set[tuple[int, int]] = set()
    for start in range(1, n + 1, h + 1):
        block = range(start, start + h + 1)
        edges.update(itertools.combinations(block, 2))
    return SpanningFactor(n, h, frozenset(edges))


def phi(matching: Matching) -> int:
    """Potential sum(2^(u+v)) over matching edges; exact arbitrary precision.

    Exponents u+v can repeat across edges (e.g. the nested matching on [4]),
    so the value is a true sum, not a bit mask.
    """
    return sum(1 << (u + v) for u, v in matching.edges)


def perfect_matchings(n: int) -> Iterator[Matching]:
    """All (n-1)!! perfect matchings of {1..n} in a fixed deterministic order.

    The smallest uncovered vertex is paired with each larger uncovered vertex
    in ascending order, recursively.
    """
    if n < 2 or n % 2:
        raise InvalidInput(f"perfect matchings need even n >= 2, got {n}")

    def rec(free: list[int], acc: list[tuple[int, int]]) -> Iterator[Matching]:
        if not free:
            yield Matching(n, frozenset(acc))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1 :]
            acc.append((a, b))
            yield from rec(rest, acc)
            acc.pop()

    yield from rec(list(range(1, n + 1)), [])


def degree_sequences(
    n: int, max_degree: int | None = None
) -> Iterator[DegreeSequence]:
    """All weakly decreasing sequences with 1 <= d_i <= max_degree (default n-1)."""
    hi = n - 1 if max_degree is None else min(max_degree, n - 1)
    if hi < 1:
        return
    for tup in itertools.combinations_with_replacement(range(hi, 0, -1), n):
        yield DegreeSequence(tup)


def graph_to_text(g: LabeledGraph) -> str:
    """Canonical edge-list text: first line n, then 'i j' lines sorted."""
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in g.edge_list())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> LabeledGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidInput("empty graph text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise InvalidInput(f"first line must be the vertex count: {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidInput(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)
