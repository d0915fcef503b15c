"""Bipartite graphs, their text formats, and the odd-degree transformation.

Vertices are addressed two ways.  Side-local indices ``(side, i)`` are used by
the edge list; global ids put the left side first, so left vertex ``i`` is
``i`` and right vertex ``j`` is ``left_count + j``.  Set-valued helpers such as
:func:`cut_count` take global ids.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .config import GraphParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.left_count < 0 or self.right_count < 0:
            raise ValueError("vertex counts must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen: set[Edge] = set()
        for j, (u, v) in enumerate(edges):
            if not (0 <= u < self.left_count and 0 <= v < self.right_count):
                raise ValueError(f"edge {j} = {(u, v)} has a vertex index out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_count(self) -> int:
        return self.left_count + self.right_count

    @property
    def is_balanced(self) -> bool:
        return self.left_count == self.right_count

    def right_vertex(self, j: int) -> int:
        """Global id of right vertex ``j``."""
        return self.left_count + j

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge indices per global vertex id."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for j, (u, v) in enumerate(self.edges):
            inc[u].append(j)
            inc[self.left_count + v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.adjacency)

    @property
    def left_degrees(self) -> tuple[int, ...]:
        return self.degrees[: self.left_count]

    @property
    def right_degrees(self) -> tuple[int, ...]:
        return self.degrees[self.left_count :]

    @cached_property
    def left_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.left_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def right_neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.right_count)]
        for u, v in self.edges:
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def right_neighbor_masks(self) -> tuple[int, ...]:
        """Bitmask over left indices of each right vertex's neighbourhood."""
        return tuple(sum(1 << u for u in nb) for nb in self.right_neighbors)

    def is_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees)

    def biadjacency(self) -> list[list[int]]:
        rows = [[0] * self.right_count for _ in range(self.left_count)]
        for u, v in self.edges:
            rows[u][v] = 1
        return rows

    def relabeled(self, left_perm: list[int], right_perm: list[int], edge_order: list[int] | None = None) -> "BipartiteGraph":
        """Copy with left vertex ``u`` renamed ``left_perm[u]`` (likewise right), edges optionally reordered."""
        edges = [self.edges[j] for j in edge_order] if edge_order is not None else list(self.edges)
        return BipartiteGraph(
            self.left_count,
            self.right_count,
            tuple((left_perm[u], right_perm[v]) for u, v in edges),
        )


def complete_bipartite(n: int, n2: int | None = None) -> BipartiteGraph:
    n2 = n if n2 is None else n2
    return BipartiteGraph(n, n2, tuple((u, v) for u in range(n) for v in range(n2)))


def from_biadjacency(rows: list[list[int]]) -> BipartiteGraph:
    n2 = len(rows[0]) if rows else 0
    edges = tuple((u, v) for u, row in enumerate(rows) for v, a in enumerate(row) if a)
    return BipartiteGraph(len(rows), n2, edges)


# -- text formats ---------------------------------------------------------


def _parse_edge_list(text: str) -> BipartiteGraph:
    header: tuple[int, int, int] | None = None
    header_line = 0
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 4 or fields[0] != "bipartite":
                raise GraphParseError(f"malformed header, line {lineno}")
            try:
                nl, nr, m = (int(x) for x in fields[1:])
            except ValueError:
                raise GraphParseError(f"malformed header, line {lineno}") from None
            if min(nl, nr, m) < 0:
                raise GraphParseError(f"malformed header, line {lineno}")
            header, header_line = (nl, nr, m), lineno
            continue
        if len(fields) != 2:
            raise GraphParseError(f"malformed edge, line {lineno}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"malformed edge, line {lineno}") from None
        if not (0 <= u < header[0] and 0 <= v < header[1]):
            raise GraphParseError(f"vertex index out of range, line {lineno}")
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge, line {lineno}")
        if len(edges) == header[2]:
            raise GraphParseError(f"more edges than declared, line {lineno}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise GraphParseError("malformed header, line 1: missing 'bipartite' header")
    if len(edges) != header[2]:
        raise GraphParseError(
            f"header declares {header[2]} edges but {len(edges)} found, line {header_line}"
        )
    return BipartiteGraph(header[0], header[1], tuple(edges))


def _parse_json(text: str) -> BipartiteGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON, line {exc.lineno}") from None
    if not isinstance(obj, dict) or not {"left", "right", "edges"} <= obj.keys():
        raise GraphParseError("JSON graph needs 'left', 'right' and 'edges', line 1")
    nl, nr = obj["left"], obj["right"]
    if not (isinstance(nl, int) and isinstance(nr, int)) or nl < 0 or nr < 0:
        raise GraphParseError("malformed header, line 1")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for k, pair in enumerate(obj["edges"]):
        # JSON has no edge lines; report the edge's position as its line
        where = f"edge {k}, line {k + 1}"
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise GraphParseError(f"malformed edge, {where}")
        u, v = pair
        if not (0 <= u < nl and 0 <= v < nr):
            raise GraphParseError(f"vertex index out of range, {where}")
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge, {where}")
        seen.add((u, v))
        edges.append((u, v))
    return BipartiteGraph(nl, nr, tuple(edges))


def parse_graph(text: str, format: str | None = None) -> BipartiteGraph:
    """Parse ``edge-list`` or ``json`` text; ``format=None`` sniffs the first character."""
    if format is None:
        format = "json" if text.lstrip().startswith("{") else "edge-list"
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: BipartiteGraph, format: str = "edge-list") -> str:
    if format == "edge-list":
        lines = [f"bipartite {g.left_count} {g.right_count} {g.m}"]
        lines += [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    if format == "json":
        return json.dumps({"left": g.left_count, "right": g.right_count, "edges": [list(e) for e in g.edges]})
    raise ValueError(f"unknown graph format {format!r}")


# -- structure ------------------------------------------------------------


def connected_components(g: BipartiteGraph) -> int:
    """Number of components, isolated vertices included."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = g.vertex_count
    for u, v in g.edges:
        a, b = find(u), find(g.left_count + v)
        if a != b:
            parent[a] = b
            components -= 1
    return components


def cut_count(g: BipartiteGraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Edges with one endpoint in ``S`` and the other in ``T`` (global ids)."""
    S, T = set(S), set(T)
    if S & T:
        raise ValueError("cut_count needs disjoint vertex sets")
    count = 0
    for u, v in g.edges:
        w = g.left_count + v
        if (u in S and w in T) or (u in T and w in S):
            count += 1
    return count


@dataclass(frozen=True)
class OddTransformResult:
    graph: BipartiteGraph
    added_left: tuple[int, ...]
    added_right: tuple[int, ...]
    added_edge_count: int
    bridge_edge_present: bool
    was_already_odd: bool


def to_odd_graph(g: BipartiteGraph, force: bool = False) -> OddTransformResult:
    """Odd-degree bipartite graph with the same perfect-matching count as ``g``.

    Appends a hub and a pendant to each side: left ``n`` / ``n+1`` and right
    ``n`` / ``n+1``.  Every even-degree vertex is joined to the opposite hub,
    each hub gets the opposite pendant, and the two hubs are joined when both
    would otherwise be even.  Already-odd graphs come back untouched unless
    ``force`` is set.
    """
    if not g.is_balanced:
        raise ValueError("odd transformation needs |V1| == |V2|")
    if g.is_odd() and not force:
        return OddTransformResult(g, (), (), 0, False, True)

    n = g.left_count
    even_left = [u for u, d in enumerate(g.left_degrees) if d % 2 == 0]
    even_right = [v for v, d in enumerate(g.right_degrees) if d % 2 == 0]
    if len(even_left) % 2 != len(even_right) % 2:
        raise AssertionError("even-degree vertex counts differ in parity on the two sides")

    hub_left, pendant_left = n, n + 1
    hub_right, pendant_right = n, n + 1
    new_edges = [(u, hub_right) for u in even_left]
    new_edges += [(hub_left, v) for v in even_right]
    new_edges += [(pendant_left, hub_right), (hub_left, pendant_right)]

    hub_left_deg = sum(1 for u, _ in new_edges if u == hub_left)
    hub_right_deg = sum(1 for _, v in new_edges if v == hub_right)
    assert hub_left_deg % 2 == hub_right_deg % 2
    bridge = hub_left_deg % 2 == 0
    if bridge:
        new_edges.append((hub_left, hub_right))

    out = BipartiteGraph(n + 2, n + 2, g.edges + tuple(new_edges))
    assert out.is_odd()
    return OddTransformResult(
        graph=out,
        added_left=(hub_left, pendant_left),
        added_right=(hub_right, pendant_right),
        added_edge_count=len(new_edges),
        bridge_edge_present=bridge,
        was_already_odd=False,
    )
