"""Decompose a graph whose degrees are all odd into exactly n/2 paths.

In such a decomposition every vertex is the endpoint of exactly one path,
so it is fully described by a *transition system*: at each vertex one
incident edge is terminal and the others are paired up into
pass-throughs.  Following the transitions splits E into trails.  The
search below is a conflict-directed local search (noisy greedy moves at
vertices lying on bad trails) over transition systems, minimising

    cost = #closed trails + #repeated vertex visits over all trails.

Cost zero means every trail is an open path, and there are n/2 of them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph
from .paths import Decomposition, Path

DEFAULT_MAX_STEPS = 200_000
NOISE = 0.15
RESTART_AFTER = 20_000


class BudgetExceeded(RuntimeError):
    """The search ran out of steps.  This says nothing about existence."""

    def __init__(self, message: str, best_cost: int):
        super().__init__(message)
        self.best_cost = best_cost


def _matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for j, other in enumerate(rest):
        for tail in _matchings(rest[:j] + rest[j + 1:]):
            yield [(first, other)] + tail


def _local_configs(incident: Sequence[int]) -> list[dict[int, int]]:
    """Every (terminal edge, pairing of the rest) at one vertex, as partner maps."""
    configs = []
    for t in incident:
        rest = [e for e in incident if e != t]
        for matching in _matchings(rest):
            partner = {t: -1}
            for a, b in matching:
                partner[a] = b
                partner[b] = a
            configs.append(partner)
    return configs


@dataclass
class _Trail:
    verts: list[int]
    edges: list[int]
    closed: bool

    @property
    def cost(self) -> int:
        return (len(self.verts) - len(set(self.verts))) + (1 if self.closed else 0)


class _Search:
    def __init__(self, g: Graph, rng: random.Random):
        self.g = g
        self.rng = rng
        self.ends = list(g.edges)
        index = {e: i for i, e in enumerate(self.ends)}
        self.incident = [
            [index[(min(v, w), max(v, w))] for w in g.adjacency[v]] for v in range(g.n)
        ]
        self.options = [_local_configs(inc) for inc in self.incident]
        self.config: list[dict[int, int]] = [{} for _ in range(g.n)]
        self.trail_of: list[int] = [-1] * len(self.ends)
        self.trails: dict[int, _Trail] = {}
        self.next_id = 0
        self.cost = 0

    def other(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        return b if v == a else a

    def randomize(self) -> None:
        for v in range(self.g.n):
            self.config[v] = self.rng.choice(self.options[v])
        self.trails.clear()
        self.cost = 0
        for t in self._trace(range(len(self.ends))):
            self._add(t)

    def _trace(self, edges) -> list[_Trail]:
        """Split an edge set closed under transitions into its trails."""
        edges = sorted(edges)
        todo = set(edges)
        out = []
        for e in edges:
            for start in self.ends[e]:
                if e in todo and self.config[start][e] == -1:
                    out.append(self._walk(start, e, todo, closed=False))
        for e in edges:
            if e in todo:
                out.append(self._walk(self.ends[e][0], e, todo, closed=True))
        return out

    def _walk(self, v: int, e: int, todo: set[int], closed: bool) -> _Trail:
        verts, es = [v], []
        while True:
            todo.discard(e)
            es.append(e)
            w = self.other(e, v)
            nxt = self.config[w][e]
            if nxt == -1 or (closed and nxt == es[0]):
                if not closed:
                    verts.append(w)
                return _Trail(verts, es, closed)
            verts.append(w)
            v, e = w, nxt

    def _add(self, t: _Trail) -> None:
        tid = self.next_id
        self.next_id += 1
        self.trails[tid] = t
        for e in t.edges:
            self.trail_of[e] = tid
        self.cost += t.cost

    def affected(self, v: int) -> list[int]:
        return sorted({self.trail_of[e] for e in self.incident[v]})

    def try_config(self, v: int, cfg: dict[int, int], tids: list[int]) -> tuple[int, list[_Trail]]:
        old_cfg = self.config[v]
        self.config[v] = cfg
        edges = [e for tid in tids for e in self.trails[tid].edges]
        new = self._trace(edges)
        self.config[v] = old_cfg
        old_cost = sum(self.trails[tid].cost for tid in tids)
        return sum(t.cost for t in new) - old_cost, new

    def commit(self, v: int, cfg: dict[int, int], tids: list[int], new: list[_Trail], delta: int) -> None:
        self.config[v] = cfg
        for tid in tids:
            del self.trails[tid]
        for t in new:
            tid = self.next_id
            self.next_id += 1
            self.trails[tid] = t
            for e in t.edges:
                self.trail_of[e] = tid
        self.cost += delta

    def step(self) -> None:
        bad = [tid for tid, t in self.trails.items() if t.cost]
        trail = self.trails[self.rng.choice(bad)]
        repeated = sorted({x for x in trail.verts if trail.verts.count(x) > 1})
        if repeated and self.rng.random() < 0.5:
            v = self.rng.choice(repeated)
        else:
            v = self.rng.choice(trail.verts)
        choices = [c for c in self.options[v] if c != self.config[v]]
        if not choices:
            return
        tids = self.affected(v)
        if self.rng.random() < NOISE:
            cfg = self.rng.choice(choices)
            delta, new = self.try_config(v, cfg, tids)
        else:
            best = None
            for cfg in choices:
                delta, new = self.try_config(v, cfg, tids)
                if best is None or delta < best[0]:
                    best, ties = (delta, cfg, new), 1
                elif delta == best[0]:
                    ties += 1
                    if self.rng.randrange(ties) == 0:
                        best = (delta, cfg, new)
            delta, cfg, new = best
        self.commit(v, cfg, tids, new, delta)

    def paths(self) -> Decomposition:
        out: list[Path] = []
        for t in self.trails.values():
            p = tuple(t.verts)
            out.append(p if p[0] < p[-1] else p[::-1])
        return sorted(out)


def odd_graph_decompose(g: Graph, seed: int = 0, max_steps: int = DEFAULT_MAX_STEPS) -> Decomposition:
    """Path decomposition of size n/2 for a graph with every degree odd.

    Deterministic for a fixed ``seed``.  Raises :class:`BudgetExceeded`
    if no solution is found within ``max_steps`` local moves.
    """
    if any(g.degree(v) % 2 == 0 for v in range(g.n)):
        raise ValueError("every vertex must have odd degree")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    search = _Search(g, random.Random(seed))
    search.randomize()
    best = search.cost
    since_best = 0
    for _ in range(max_steps):
        if search.cost == 0:
            return search.paths()
        search.step()
        if search.cost < best:
            best, since_best = search.cost, 0
        else:
            since_best += 1
            if since_best >= RESTART_AFTER:
                search.randomize()
                since_best = 0
    if search.cost == 0:
        return search.paths()
    raise BudgetExceeded(f"no n/2 path decomposition within {max_steps} steps", best)
