"""Path decompositions of L1(m, k) with at most floor(n/2) paths.

The recursion splits L1(m, k) into ULG ~ L1(m-1, k), LLG ~ L1(m-1, k-1)
and a perfect matching of crossing edges.  Each crossing edge is hung off
an odd-degree endpoint: the A1 end inside ULG when k is odd and m even
(degree m-k), the B2 end inside LLG when k is even (degree k-1).  When m
and k are both odd every vertex of L1(m, k) has odd degree and the leaf
is handed to :func:`odd_graph_decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graphs import (
    DomainError,
    LeviGraph,
    LeviPartition,
    build_levi,
    llg_to_levi,
    partition_levi,
    render_label,
    ulg_to_levi,
)
from .oddgraph import DEFAULT_MAX_STEPS, BudgetExceeded, odd_graph_decompose
from .paths import (
    Decomposition,
    Path,
    binom,
    extend_at_endpoint,
    floor_bound,
    labels_to_ids,
    pascal_floor_holds,
    verify_decomposition,
)

__all__ = [
    "BudgetExceeded",
    "Case",
    "ConstructionTrace",
    "decompose_k2",
    "gallai_decompose",
    "odd_graph_decompose",
    "star_decompose",
]


class Case(str, Enum):
    STAR = "Star"
    K_EQUALS_2 = "KEquals2"
    ALL_ODD = "AllOdd"
    K_ODD_M_EVEN = "KOddMEven"
    K_EVEN = "KEven"


@dataclass
class Attachment:
    host: str  # rendered label of the endpoint the edge is hung on
    new: str
    path_index: int
    end: str  # "head" or "tail"


@dataclass
class ConstructionTrace:
    m: int
    k: int
    case_taken: Case
    size: int = 0
    subtraces: list["ConstructionTrace"] = field(default_factory=list)
    attachments: list[Attachment] = field(default_factory=list)

    @property
    def n(self) -> int:
        return binom(self.m, self.k - 1) + binom(self.m, self.k)

    @property
    def bound(self) -> int:
        return floor_bound(self.n)

    def render(self, depth: int = 0) -> str:
        pad = "  " * depth
        lines = [
            f"{pad}L1({self.m},{self.k}) case={self.case_taken.value} "
            f"size={self.size} bound={self.bound}"
        ]
        for a in self.attachments:
            lines.append(f"{pad}  attach {a.host}-{a.new} path={a.path_index} end={a.end}")
        text = "\n".join(lines) + "\n"
        return text + "".join(t.render(depth + 1) for t in self.subtraces)


def _star(leaves: list[int], center: int) -> Decomposition:
    paths = [(leaves[i], center, leaves[i + 1]) for i in range(0, len(leaves) - 1, 2)]
    if len(leaves) % 2:
        paths.append((center, leaves[-1]))
    return paths


def star_decompose(m: int) -> Decomposition:
    """L1(m, m) = K_{1,m}: leaves x1..xm paired through the centre."""
    lg = build_levi(m, m)
    return _star(list(lg.a_side), lg.b_side[0])


def _attach(
    lg: LeviGraph,
    paths: list[Path],
    host_side: frozenset[int],
    part: LeviPartition,
    offset: int,
) -> list[Attachment]:
    """Hang every crossing edge on its ``host_side`` endpoint, in place."""
    g = lg.graph
    host_degree: dict[int, int] = {}
    for p in paths:
        for u, v in zip(p, p[1:]):
            host_degree[u] = host_degree.get(u, 0) + 1
            host_degree[v] = host_degree.get(v, 0) + 1
    used: set[tuple[int, str]] = set()
    out = []
    for a, b in part.crossing:
        host, new = (a, b) if a in host_side else (b, a)
        assert host in host_side and new not in host_side
        assert host_degree.get(host, 0) % 2 == 1, "host vertex must have odd degree"
        slot = next(((i, "tail") for i, p in enumerate(paths) if p[-1] == host), None)
        if slot is None:
            slot = next(((i, "head") for i, p in enumerate(paths) if p[0] == host), None)
        assert slot is not None, f"odd-degree vertex {host} is not a path endpoint"
        assert slot not in used, f"endpoint slot {slot} used twice"
        used.add(slot)
        i, end = slot
        paths[i] = extend_at_endpoint(g, paths[i], host, new)
        out.append(
            Attachment(render_label(g.labels[host]), render_label(g.labels[new]), offset + i, end)
        )
    return out


def _lift(sub: Decomposition, iso, side_ids: tuple[int, ...]) -> list[Path]:
    """Relabel a decomposition of the iso target back into parent ids."""
    back = iso.inverse()
    return [tuple(side_ids[back[v]] for v in p) for p in sub]


class _Builder:
    def __init__(self, seed: int, max_steps: int):
        self.seed = seed
        self.max_steps = max_steps
        self.memo: dict[tuple[int, int], tuple[Decomposition, ConstructionTrace]] = {}

    def build(self, m: int, k: int) -> tuple[Decomposition, ConstructionTrace]:
        if (m, k) not in self.memo:
            self.memo[(m, k)] = self._build(m, k)
        paths, trace = self.memo[(m, k)]
        return list(paths), trace

    def _build(self, m: int, k: int) -> tuple[Decomposition, ConstructionTrace]:
        if k == m:
            paths = star_decompose(m)
            return paths, ConstructionTrace(m, k, Case.STAR, len(paths))
        if k == 2:
            return self._k2(m)
        lg = build_levi(m, k)
        if k % 2 == 1 and m % 2 == 1:
            paths = odd_graph_decompose(lg.graph, seed=self.seed, max_steps=self.max_steps)
            return paths, ConstructionTrace(m, k, Case.ALL_ODD, len(paths))

        part = partition_levi(lg)
        ulg_iso = ulg_to_levi(part, m, k)
        llg_iso = llg_to_levi(part, m, k)
        ulg_sub, ulg_trace = self.build(m - 1, k)
        llg_sub, llg_trace = self.build(m - 1, k - 1)
        ulg_paths = _lift(ulg_sub, ulg_iso, part.ulg_ids)
        llg_paths = _lift(llg_sub, llg_iso, part.llg_ids)
        if k % 2 == 1:
            assert m % 2 == 0 and (m - k) % 2 == 1
            case = Case.K_ODD_M_EVEN
            attachments = _attach(lg, ulg_paths, part.a1, part, 0)
        else:
            assert (k - 1) % 2 == 1
            case = Case.K_EVEN
            attachments = _attach(lg, llg_paths, part.b2, part, len(ulg_paths))
        paths = ulg_paths + llg_paths
        trace = ConstructionTrace(m, k, case, len(paths), [ulg_trace, llg_trace], attachments)
        assert pascal_floor_holds(m - 1, k)
        assert ulg_trace.size + llg_trace.size == trace.size <= trace.bound
        return paths, trace

    def _k2(self, m: int) -> tuple[Decomposition, ConstructionTrace]:
        lg = build_levi(m, 2)
        if m == 3:
            # base case: the 6-cycle split at {1,3}
            labels = [((1, 3), (1,), (1, 2), (2,), (2, 3)), ((1, 3), (3,), (2, 3))]
            paths = [labels_to_ids(lg.graph, p) for p in labels]
            return paths, ConstructionTrace(m, 2, Case.K_EQUALS_2, len(paths))
        part = partition_levi(lg)
        ulg_iso = ulg_to_levi(part, m, 2)
        ulg_sub, ulg_trace = self.build(m - 1, 2)
        ulg_paths = _lift(ulg_sub, ulg_iso, part.ulg_ids)
        # LLG is the star centred at {m} with leaves {i,m}
        center = lg.graph.id_of((m,))
        leaves = [v for v in part.llg_ids if v != center]
        llg_paths = _star(leaves, center)
        star_trace = ConstructionTrace(m - 1, m - 1, Case.STAR, len(llg_paths))
        attachments = _attach(lg, llg_paths, part.b2, part, len(ulg_paths))
        paths = ulg_paths + llg_paths
        trace = ConstructionTrace(
            m, 2, Case.K_EQUALS_2, len(paths), [ulg_trace, star_trace], attachments
        )
        assert trace.size <= trace.bound
        return paths, trace


def decompose_k2(m: int) -> tuple[Decomposition, ConstructionTrace]:
    """L1(m, 2) by induction on m: ULG from L1(m-1, 2), LLG a star."""
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    return _Builder(0, DEFAULT_MAX_STEPS).build(m, 2)


def gallai_decompose(
    m: int, k: int, seed: int = 0, max_steps: int = DEFAULT_MAX_STEPS
) -> tuple[Decomposition, ConstructionTrace]:
    """Decomposition of L1(m, k) into at most floor(n/2) paths, with its trace.

    ``seed`` and ``max_steps`` are forwarded to the all-odd leaves; those
    leaves raise :class:`BudgetExceeded` if their search runs dry.
    """
    if m < 2 or not 2 <= k <= m:
        raise DomainError(f"need m >= 2 and 2 <= k <= m, got m={m}, k={k}")
    paths, trace = _Builder(seed, max_steps).build(m, k)
    report = verify_decomposition(build_levi(m, k).graph, paths)
    assert report.ok, report.render()
    return paths, trace
