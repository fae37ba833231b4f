"""Paths, decompositions, the verifier, and size bounds."""

from __future__ import annotations

import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Sequence, Union

from .graphs import Edge, Graph, Label, canonical_edge

Path = tuple[int, ...]
Decomposition = list[Path]


class PathError(ValueError):
    """A path edit was asked to break its own preconditions."""


@dataclass(frozen=True)
class NotAPath:
    path_index: int
    reason: str

    def __str__(self) -> str:
        return f"NotAPath path={self.path_index} reason={self.reason}"


@dataclass(frozen=True)
class DuplicateEdge:
    edge: Edge
    path_indices: tuple[int, ...]

    def __str__(self) -> str:
        idx = ",".join(map(str, self.path_indices))
        return f"DuplicateEdge edge={self.edge[0]}-{self.edge[1]} paths={idx}"


@dataclass(frozen=True)
class UncoveredEdge:
    edge: Edge

    def __str__(self) -> str:
        return f"UncoveredEdge edge={self.edge[0]}-{self.edge[1]}"


@dataclass(frozen=True)
class ForeignEdge:
    edge: Edge
    path_index: int

    def __str__(self) -> str:
        return f"ForeignEdge edge={self.edge[0]}-{self.edge[1]} path={self.path_index}"


Violation = Union[NotAPath, DuplicateEdge, UncoveredEdge, ForeignEdge]


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)
    size: int = 0
    covered_edges: int = 0
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = [str(v) for v in self.violations]
        lines += [f"warning: {w}" for w in self.warnings]
        if self.ok:
            lines.append(f"OK size={self.size}")
        else:
            lines.append(f"FAIL violations={len(self.violations)}")
        return "\n".join(lines) + "\n"


def path_edges(p: Sequence[int]) -> list[Edge]:
    return [canonical_edge(p[i], p[i + 1]) for i in range(len(p) - 1)]


def _check_path(g: Graph, p: Sequence[int], index: int, report: VerificationReport) -> list[Edge]:
    """Append this path's violations; return its in-graph edges."""
    if len(p) == 0:
        report.violations.append(NotAPath(index, "empty"))
        return []
    bad = [v for v in p if not (isinstance(v, int) and 0 <= v < g.n)]
    if bad:
        report.violations.append(NotAPath(index, f"vertex {bad[0]} out of range"))
        return []
    seen: set[int] = set()
    for v in p:
        if v in seen:
            report.violations.append(NotAPath(index, f"vertex {v} repeated"))
            break
        seen.add(v)
    if len(p) == 1:
        report.warnings.append(f"path {index} has length 0")
    good = []
    for e in path_edges(p):
        if g.has_edge(*e):
            good.append(e)
        else:
            report.violations.append(ForeignEdge(e, index))
    return good


def verify_path(g: Graph, p: Sequence[int]) -> VerificationReport:
    report = VerificationReport(size=1)
    report.covered_edges = len(set(_check_path(g, p, 0, report)))
    return report


def verify_decomposition(g: Graph, d: Sequence[Sequence[int]]) -> VerificationReport:
    report = VerificationReport(size=len(d))
    users: dict[Edge, list[int]] = defaultdict(list)
    for i, p in enumerate(d):
        for e in _check_path(g, p, i, report):
            users[e].append(i)
    for e in sorted(users):
        if len(users[e]) > 1:
            report.violations.append(DuplicateEdge(e, tuple(users[e])))
    for e in g.edges:
        if e not in users:
            report.violations.append(UncoveredEdge(e))
    report.covered_edges = len(users)
    return report


# -- bounds -----------------------------------------------------------------


def binom(n: int, j: int) -> int:
    """C(n, j) with C(n, j) = 0 outside 0 <= j <= n."""
    if j < 0 or n < 0 or j > n:
        return 0
    return math.comb(n, j)


def gallai_bound(n: int) -> int:
    """ceil(n/2), the conjectured general bound."""
    return (n + 1) // 2


def floor_bound(n: int) -> int:
    """floor(n/2), the bound proven for Levi graphs."""
    return n // 2


def odd_vertex_lower_bound(g: Graph) -> int:
    odd = sum(1 for v in range(g.n) if g.degree(v) % 2)
    assert odd % 2 == 0, "handshake lemma violated"
    return odd // 2


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s] or not g.adjacency[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def component_path_bound(adjacency: Sequence[Sequence[int]], comp: Sequence[int]) -> int:
    """Longest possible path (in edges) inside one connected component."""
    color = {comp[0]: 0}
    queue = deque([comp[0]])
    bipartite = True
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                bipartite = False
    if not bipartite:
        return len(comp) - 1
    ones = sum(color.values())
    small, large = sorted((len(comp) - ones, ones))
    return 2 * small if large > small else len(comp) - 1


def max_path_length_bound(g: Graph) -> int:
    """Upper bound on the number of edges of any path in ``g``.

    A path alternates sides of a bipartite component, so with parts of
    sizes m1 < m2 it has at most 2*m1 edges; otherwise n_c - 1.
    """
    comps = _components(g)
    if not comps:
        return 0
    return max(component_path_bound(g.adjacency, c) for c in comps)


def edge_count_lower_bound(g: Graph) -> int:
    if not g.edges:
        return 0
    return -(-len(g.edges) // max_path_length_bound(g))


def pascal_floor_holds(m: int, k: int) -> bool:
    if not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got m={m}, k={k}")
    lhs = (binom(m, k - 1) + binom(m, k)) // 2 + (binom(m, k - 2) + binom(m, k - 1)) // 2
    rhs = (binom(m + 1, k - 1) + binom(m + 1, k)) // 2
    return lhs <= rhs


# -- path edits -------------------------------------------------------------


def extend_at_endpoint(g: Graph, p: Sequence[int], endpoint: int, new_vertex: int) -> Path:
    """Attach edge (endpoint, new_vertex) to the end of ``p`` that is ``endpoint``."""
    p = tuple(p)
    if not g.has_edge(endpoint, new_vertex):
        raise PathError(f"({endpoint}, {new_vertex}) is not an edge")
    if new_vertex in p:
        raise PathError(f"vertex {new_vertex} already on the path")
    if p[-1] == endpoint:
        return p + (new_vertex,)
    if p[0] == endpoint:
        return (new_vertex,) + p
    raise PathError(f"vertex {endpoint} is not an endpoint of the path")


def subdivide_path(p: Sequence[int]) -> tuple[Label, ...]:
    """K_m path (vertices 1..m) -> L1(m,2) path u, {u,v}, v, ... as labels."""
    out: list[Label] = [(p[0],)]
    for u, v in zip(p, p[1:]):
        out.append((min(u, v), max(u, v)))
        out.append((v,))
    return tuple(out)


def labels_to_ids(g: Graph, labels: Sequence[Label]) -> Path:
    return tuple(g.id_of(lab) for lab in labels)
