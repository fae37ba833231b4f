from __future__ import annotations

from pathlib import Path

import pytest

from levidecomp.graphs import Graph

GOLDEN = Path(__file__).parent / "golden"


def plain_graph(n: int, edges) -> Graph:
    return Graph.from_edges([(i,) for i in range(1, n + 1)], edges)


def cycle(n: int) -> Graph:
    return plain_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return plain_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _is_path_block(edges) -> bool:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if max(deg.values()) > 2 or len(deg) != len(edges) + 1:
        return False
    # connected + |V| = |E| + 1 => tree; max degree 2 => path
    adj: dict[int, list[int]] = {v: [] for v in deg}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(deg))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(deg)


def brute_path_number(g: Graph) -> int:
    """Minimum number of blocks over all set partitions of E into paths.

    Independent of the branch-and-bound oracle; only for ~8 edges.
    """
    edges = list(g.edges)
    best = len(edges)

    def place(i: int, blocks: list[list]) -> None:
        nonlocal best
        if len(blocks) >= best and i < len(edges):
            return
        if i == len(edges):
            if all(_is_path_block(b) for b in blocks):
                best = min(best, len(blocks))
            return
        for b in blocks:
            b.append(edges[i])
            place(i + 1, blocks)
            b.pop()
        blocks.append([edges[i]])
        place(i + 1, blocks)
        blocks.pop()

    place(0, [])
    return best if edges else 0


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    lines = request.config._acceptance_lines

    def record(name: str, ok: bool, detail: str = "") -> None:
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({detail})" if detail else ""))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
