"""Levi graphs L1(m, k), complete graphs, and the LLG/ULG split.

A vertex is identified by its label, a strictly increasing tuple of integers.
Ids are dense (0..n-1) and assigned by sorting labels lexicographically
within each side, A-side first, then B-side.  Complete graphs use the
singleton labels (1,), (2,), ..., (m,).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Label = tuple[int, ...]
Edge = tuple[int, int]


class DomainError(ValueError):
    """Raised when construction parameters fall outside their domain."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on ids 0..n-1."""

    labels: tuple[Label, ...]
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _index: dict[Label, int] = field(repr=False, compare=False, hash=False)
    _edge_set: frozenset[Edge] = field(repr=False, compare=False, hash=False)

    @classmethod
    def from_edges(cls, labels: Sequence[Label], edges: Iterable[tuple[int, int]]) -> "Graph":
        n = len(labels)
        canon: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = canonical_edge(u, v)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        labels = tuple(tuple(lab) for lab in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise ValueError("vertex labels must be distinct")
        return cls(
            labels=labels,
            edges=tuple(sorted(canon)),
            adjacency=tuple(tuple(sorted(a)) for a in nbrs),
            _index=index,
            _edge_set=frozenset(canon),
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def id_of(self, label: Iterable[int]) -> int:
        return self._index[tuple(label)]

    def induced(self, vertex_ids: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertex_ids`` (kept in the given order).

        Returns the subgraph and the tuple mapping subgraph id -> parent id.
        """
        local = {v: i for i, v in enumerate(vertex_ids)}
        sub_edges = [
            (local[u], local[v]) for u, v in self.edges if u in local and v in local
        ]
        sub = Graph.from_edges([self.labels[v] for v in vertex_ids], sub_edges)
        return sub, tuple(vertex_ids)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def girth(self) -> float:
        """Length of a shortest cycle, ``inf`` for forests (BFS from every vertex)."""
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best


@dataclass(frozen=True)
class LeviGraph:
    graph: Graph
    m: int
    k: int
    sides: tuple[str, ...]

    @property
    def a_side(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sides) if s == "A")

    @property
    def b_side(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.sides) if s == "B")


def build_levi(m: int, k: int) -> LeviGraph:
    """Build L1(m, k): (k-1)-subsets of [m] joined to the k-subsets containing them."""
    if m < 2 or not 2 <= k <= m:
        raise DomainError(f"L1(m,k) needs m >= 2 and 2 <= k <= m, got m={m}, k={k}")
    ground = range(1, m + 1)
    a_labels = list(combinations(ground, k - 1))
    b_labels = list(combinations(ground, k))
    labels = a_labels + b_labels
    offset = len(a_labels)
    a_index = {lab: i for i, lab in enumerate(a_labels)}
    edges = []
    for j, big in enumerate(b_labels):
        for drop in range(k):
            small = big[:drop] + big[drop + 1:]
            edges.append((a_index[small], offset + j))
    sides = ("A",) * len(a_labels) + ("B",) * len(b_labels)
    return LeviGraph(Graph.from_edges(labels, edges), m, k, sides)


def build_complete(m: int) -> Graph:
    if m < 1:
        raise DomainError(f"K_m needs m >= 1, got {m}")
    return Graph.from_edges([(i,) for i in range(1, m + 1)], combinations(range(m), 2))


@dataclass(frozen=True)
class LeviPartition:
    """Split of L1(m, k) by presence of m in the label.

    ``llg_ids`` / ``ulg_ids`` map a subgraph id back to its id in the parent.
    """

    llg: Graph
    ulg: Graph
    llg_ids: tuple[int, ...]
    ulg_ids: tuple[int, ...]
    crossing: tuple[Edge, ...]
    a1: frozenset[int]
    a2: frozenset[int]
    b1: frozenset[int]
    b2: frozenset[int]


def partition_levi(g: LeviGraph) -> LeviPartition:
    m = g.m
    labels = g.graph.labels
    with_m = [v for v in range(g.graph.n) if m in labels[v]]
    without_m = [v for v in range(g.graph.n) if m not in labels[v]]
    llg, llg_ids = g.graph.induced(with_m)
    ulg, ulg_ids = g.graph.induced(without_m)
    a1 = frozenset(v for v in without_m if g.sides[v] == "A")
    b1 = frozenset(v for v in without_m if g.sides[v] == "B")
    a2 = frozenset(v for v in with_m if g.sides[v] == "A")
    b2 = frozenset(v for v in with_m if g.sides[v] == "B")
    # each crossing edge joins u in A1 to label(u) + {m} in B2
    crossing = tuple(
        sorted(canonical_edge(u, g.graph.id_of(labels[u] + (m,))) for u in a1)
    )
    return LeviPartition(llg, ulg, llg_ids, ulg_ids, crossing, a1, a2, b1, b2)


@dataclass(frozen=True)
class IsoMap:
    """Adjacency-preserving bijection from a partition side onto a Levi graph."""

    forward: dict[int, int]
    target: LeviGraph

    def inverse(self) -> dict[int, int]:
        return {t: s for s, t in self.forward.items()}


def _check_iso(source: Graph, forward: dict[int, int], target: Graph) -> None:
    if len(forward) != source.n or sorted(forward.values()) != list(range(target.n)):
        raise AssertionError("vertex map is not a bijection")
    if len(source.edges) != len(target.edges):
        raise AssertionError("edge counts differ")
    for u, v in source.edges:
        if not target.has_edge(forward[u], forward[v]):
            raise AssertionError(f"edge ({u}, {v}) not preserved")


def llg_to_levi(p: LeviPartition, m: int, k: int) -> IsoMap:
    """LLG of L1(m, k) onto L1(m-1, k-1) by dropping m from every label."""
    if m < 3 or k < 3:
        raise DomainError(f"LLG isomorphism needs m >= 3 and k >= 3, got m={m}, k={k}")
    target = build_levi(m - 1, k - 1)
    forward = {
        v: target.graph.id_of(tuple(x for x in lab if x != m))
        for v, lab in enumerate(p.llg.labels)
    }
    _check_iso(p.llg, forward, target.graph)
    return IsoMap(forward, target)


def ulg_to_levi(p: LeviPartition, m: int, k: int) -> IsoMap:
    """ULG of L1(m, k) onto L1(m-1, k); labels are unchanged."""
    if m < 3 or k > m - 1:
        raise DomainError(f"ULG isomorphism needs m >= 3 and k <= m-1, got m={m}, k={k}")
    target = build_levi(m - 1, k)
    forward = {v: target.graph.id_of(lab) for v, lab in enumerate(p.ulg.labels)}
    _check_iso(p.ulg, forward, target.graph)
    return IsoMap(forward, target)


def render_label(label: Label) -> str:
    """``(1, 3)`` -> ``{1,3}``; singletons render as the bare integer."""
    if len(label) == 1:
        return str(label[0])
    return "{" + ",".join(map(str, label)) + "}"
