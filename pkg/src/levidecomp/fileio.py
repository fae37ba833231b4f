"""Graph / decomposition files (JSON) and DOT export."""

from __future__ import annotations

import json
from typing import Any, Optional, Sequence

from .graphs import Graph, LeviGraph, render_label
from .paths import Decomposition


class FormatError(ValueError):
    pass


def graph_to_obj(g: Graph | LeviGraph) -> dict[str, Any]:
    if isinstance(g, LeviGraph):
        graph = g.graph
        obj: dict[str, Any] = {"kind": "levi", "m": g.m, "k": g.k}
        vertices = [
            {"id": i, "label": list(lab), "side": side}
            for i, (lab, side) in enumerate(zip(graph.labels, g.sides))
        ]
    else:
        graph = g
        obj = {"kind": "plain"}
        vertices = [{"id": i, "label": list(lab)} for i, lab in enumerate(graph.labels)]
    obj["vertices"] = vertices
    obj["edges"] = [list(e) for e in graph.edges]
    return obj


def dumps_graph(g: Graph | LeviGraph) -> str:
    obj = graph_to_obj(g)
    head = {k: v for k, v in obj.items() if k not in ("vertices", "edges")}
    lines = ["{"]
    lines += [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()]
    lines.append('  "vertices": [')
    lines.append(",\n".join(f"    {json.dumps(v)}" for v in obj["vertices"]))
    lines.append("  ],")
    lines.append('  "edges": [')
    lines.append(",\n".join(f"    {json.dumps(e)}" for e in obj["edges"]))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_from_obj(obj: Any) -> Graph:
    try:
        vertices = sorted(obj["vertices"], key=lambda v: v["id"])
        if [v["id"] for v in vertices] != list(range(len(vertices))):
            raise FormatError("vertex ids must be 0..n-1")
        labels = []
        for v in vertices:
            lab = tuple(int(x) for x in v["label"])
            if list(lab) != sorted(set(lab)):
                raise FormatError(f"label {v['label']} is not strictly increasing")
            labels.append(lab)
        edges = [(int(u), int(w)) for u, w in obj["edges"]]
        return Graph.from_edges(labels, edges)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed graph object: {exc}") from exc


def loads_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def dumps_decomposition(d: Decomposition, graph: Optional[Graph | LeviGraph | str] = None) -> str:
    """``graph`` may be a graph (inlined) or a path to a graph file."""
    lines = ["{"]
    if isinstance(graph, str):
        lines.append(f'  "graph": {json.dumps(graph)},')
    elif graph is not None:
        lines.append(f'  "graph": {json.dumps(graph_to_obj(graph))},')
    lines.append('  "paths": [')
    lines.append(",\n".join(f"    {json.dumps(list(p))}" for p in d))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_decomposition(text: str) -> tuple[Decomposition, Any]:
    """Returns the paths and the raw ``graph`` entry (object, path, or None)."""
    try:
        obj = json.loads(text)
        paths = [tuple(int(v) for v in p) for p in obj["paths"]]
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed decomposition: {exc}") from exc
    return paths, obj.get("graph")


def to_dot(g: Graph | LeviGraph, name: str = "G") -> str:
    graph = g.graph if isinstance(g, LeviGraph) else g
    names = [json.dumps(render_label(lab)) for lab in graph.labels]
    lines = [f"graph {json.dumps(name)} {{"]
    if isinstance(g, LeviGraph):
        lines.append("  rankdir=LR;")
        for side in ("A", "B"):
            members = " ".join(f"{names[i]};" for i, s in enumerate(g.sides) if s == side)
            lines.append(f"  {{ rank=same; {members} }}")
    else:
        lines += [f"  {nm};" for nm in names]
    lines += [f"  {names[u]} -- {names[v]};" for u, v in graph.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_paths(g: Graph, d: Sequence[Sequence[int]]) -> str:
    """One ``P<i>: a, b, ...`` line per path, vertices shown by label."""
    return "".join(
        f"P{i}: " + ", ".join(render_label(g.labels[v]) for v in p) + "\n"
        for i, p in enumerate(d, start=1)
    )
