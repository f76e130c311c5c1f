"""Canonical JSON form of graphs and certificates.

A graph is ``{"u": <int>, "v": <int>, "edges": [[u, v], ...]}``; extra keys
(for example gadget metadata under ``"meta"``) are ignored when reading.
Rationals are written as strings ``"p/q"`` or ``"n"``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import IO

from .bigraph import BipartiteGraph, GraphError, VertexSet, build_graph, render_rational


def graph_to_dict(G: BipartiteGraph) -> dict:
    return {"u": G.u_count, "v": G.v_count, "edges": [[u, v] for u, v in G.edges]}


def graph_from_dict(data) -> BipartiteGraph:
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    try:
        u, v, edges = data["u"], data["v"], data["edges"]
    except KeyError as exc:
        raise GraphError(f"graph JSON missing key {exc.args[0]!r}") from None
    if not (isinstance(u, int) and isinstance(v, int)) or isinstance(u, bool) or isinstance(v, bool):
        raise GraphError("'u' and 'v' must be integers")
    if not isinstance(edges, list):
        raise GraphError("'edges' must be a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return build_graph(u, v, pairs)


def load_graph(fp: IO[str]) -> BipartiteGraph:
    try:
        data = json.load(fp)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return graph_from_dict(data)


def dump_graph(G: BipartiteGraph, **extra) -> str:
    data = graph_to_dict(G)
    data.update(extra)
    return json.dumps(data, sort_keys=True)


def to_jsonable(obj):
    """Recursively convert Fractions, VertexSets and tuples into JSON-ready values."""
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, VertexSet):
        return {"side": obj.side, "members": list(obj.members)}
    if isinstance(obj, BipartiteGraph):
        return graph_to_dict(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    return obj
