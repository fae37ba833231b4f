"""Exact path number of small graphs by branch and bound.

The search always branches on the lowest uncovered edge: every path of
the residual graph through that edge is tried (longest first, ties in
lexicographic order), so the search is complete.  A branch is cut when
the paths used so far plus a residual lower bound can no longer beat
the incumbent.  The residual bound adds, per connected component,
max(odd vertices / 2, ceil(edges / longest possible path)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graphs import Edge, Graph, canonical_edge
from .paths import Decomposition, Path, component_path_bound

DEFAULT_NODE_BUDGET = 10**7


@dataclass
class OracleResult:
    path_number: int
    witness: Decomposition
    nodes_explored: int
    status: str  # "Exact" or "BudgetExceeded"
    best_upper: int
    best_lower: int

    @property
    def exact(self) -> bool:
        return self.status == "Exact"


@dataclass
class Tightness:
    verdict: str  # "Minimal", "NotMinimal" or "Unknown"
    witness: Optional[Decomposition] = None


class _OutOfBudget(Exception):
    pass


def _normalize(p: Sequence[int]) -> Path:
    p = tuple(p)
    return p if p[0] <= p[-1] else p[::-1]


@dataclass
class _State:
    n: int
    adj: list[set[int]]
    edges_left: set[Edge] = field(default_factory=set)


def _residual_bound(st: _State) -> int:
    seen: set[int] = set()
    total = 0
    for s in range(st.n):
        if s in seen or not st.adj[s]:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in st.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        n_edges = sum(len(st.adj[v]) for v in comp) // 2
        odd = sum(1 for v in comp if len(st.adj[v]) % 2)
        longest = component_path_bound(st.adj, comp)
        total += max(odd // 2, -(-n_edges // longest))
    return total


def _simple_paths_from(st: _State, start: int, blocked: set[int]) -> list[list[int]]:
    """All simple residual paths starting at ``start`` avoiding ``blocked``."""
    out = []
    path = [start]
    on_path = set(blocked) | {start}

    def grow() -> None:
        out.append(list(path))
        for w in sorted(st.adj[path[-1]]):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                grow()
                on_path.discard(w)
                path.pop()

    grow()
    return out


def _paths_through(st: _State, u: int, v: int) -> list[Path]:
    found = []
    for right in _simple_paths_from(st, v, {u}):
        for left in _simple_paths_from(st, u, set(right)):
            found.append(tuple(reversed(left)) + tuple(right))
    found.sort(key=lambda p: (-len(p), p))
    return found


def _remove(st: _State, p: Path) -> None:
    for a, b in zip(p, p[1:]):
        st.adj[a].discard(b)
        st.adj[b].discard(a)
        st.edges_left.discard(canonical_edge(a, b))


def _restore(st: _State, p: Path) -> None:
    for a, b in zip(p, p[1:]):
        st.adj[a].add(b)
        st.adj[b].add(a)
        st.edges_left.add(canonical_edge(a, b))


def _greedy(g: Graph) -> Decomposition:
    st = _State(g.n, [set(a) for a in g.adjacency], set(g.edges))
    out = []
    while st.edges_left:
        u, v = min(st.edges_left)
        p = [u, v]
        for grow_end in (-1, 0):
            while True:
                tip = p[grow_end]
                nxt = [w for w in sorted(st.adj[tip]) if w not in p]
                if not nxt:
                    break
                p.insert(len(p) if grow_end == -1 else 0, nxt[0])
        # _remove only drops edges consecutive in p, all of which are residual
        _remove(st, tuple(p))
        out.append(_normalize(p))
    return out


def exact_path_number(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    initial: Optional[Decomposition] = None,
) -> OracleResult:
    """Minimum path decomposition of ``g`` by exhaustive search.

    ``initial`` may seed the incumbent (it must be a valid decomposition).
    On budget exhaustion the result carries the best bounds found.
    """
    st = _State(g.n, [set(a) for a in g.adjacency], set(g.edges))
    root_lower = _residual_bound(st)
    best = [_normalize(p) for p in (initial if initial is not None else _greedy(g))]
    stack: list[Path] = []
    nodes = 0

    def search() -> None:
        nonlocal best, nodes
        if not st.edges_left:
            if len(stack) < len(best):
                best = sorted(_normalize(p) for p in stack)
            return
        u, v = min(st.edges_left)
        for p in _paths_through(st, u, v):
            nodes += 1
            if nodes > node_budget:
                raise _OutOfBudget
            _remove(st, p)
            if len(stack) + 1 + _residual_bound(st) < len(best):
                stack.append(p)
                search()
                stack.pop()
            _restore(st, p)
            if len(best) == root_lower:
                return

    status = "Exact"
    if g.edges and len(best) > root_lower:
        try:
            search()
        except _OutOfBudget:
            status = "BudgetExceeded"
    return OracleResult(
        path_number=len(best),
        witness=sorted(best),
        nodes_explored=nodes,
        status=status,
        best_upper=len(best),
        best_lower=len(best) if status == "Exact" else root_lower,
    )


def check_tightness(g: Graph, constructed: Decomposition, node_budget: int = DEFAULT_NODE_BUDGET) -> Tightness:
    result = exact_path_number(g, node_budget, initial=constructed)
    if not result.exact:
        return Tightness("Unknown")
    if result.path_number < len(constructed):
        return Tightness("NotMinimal", result.witness)
    return Tightness("Minimal")
