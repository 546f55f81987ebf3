"""Immutable undirected simple graphs with positional edge identity.

Edge index i always refers to the i-th entry of the edge list, so bitset
edge subsets, codeword coordinates, and disk membership share one
coordinate system.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple


class GraphError(ValueError):
    """Invalid graph construction or query input."""


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of a graph's edges as a bitset over edge indices."""

    size: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.size:
            raise GraphError("bitset has bits outside the edge range")

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "EdgeSubset":
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise GraphError(f"edge index {i} out of range for {size} edges")
            bits |= 1 << i
        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> "EdgeSubset":
        return cls(size, 0)

    def indices(self) -> List[int]:
        return [i for i in range(self.size) if (self.bits >> i) & 1]

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool((self.bits >> i) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __le__(self, other: "EdgeSubset") -> bool:
        return self.bits & ~other.bits == 0

    def union(self, other: "EdgeSubset") -> "EdgeSubset":
        return EdgeSubset(self.size, self.bits | other.bits)


class Graph:
    """Undirected simple graph with a fixed vertex count and an ordered
    edge list.  Immutable after construction; all queries are pure."""

    def __init__(
        self,
        vertex_count: int,
        edges: Sequence[Tuple[int, int]],
        vertex_labels: Optional[Sequence[str]] = None,
        edge_labels: Optional[Sequence[str]] = None,
    ):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        self.vertex_count = vertex_count
        seen = set()
        edge_list = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u},{v}) has endpoint out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u},{v})")
            seen.add(key)
            edge_list.append((u, v))
        self.edges: Tuple[Tuple[int, int], ...] = tuple(edge_list)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else None
        self.edge_labels = tuple(edge_labels) if edge_labels is not None else None
        if self.vertex_labels is not None and len(self.vertex_labels) != vertex_count:
            raise GraphError("vertex_labels length mismatch")
        if self.edge_labels is not None and len(self.edge_labels) != len(self.edges):
            raise GraphError("edge_labels length mismatch")
        # incidence[v] = list of (edge index, other endpoint)
        inc: List[List[Tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((i, v))
            inc[v].append((i, u))
        self._incidence = tuple(tuple(x) for x in inc)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(edge index, neighbor) pairs at vertex v, in edge-index order."""
        return self._incidence[v]

    def edge_index(self, u: int, v: int) -> int:
        for i, w in self._incidence[u]:
            if w == v:
                return i
        raise GraphError(f"no edge ({u},{v})")

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for _, w in self._incidence[u])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    # --- serialization ---

    def to_json(self) -> str:
        obj = {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}
        if self.vertex_labels is not None:
            obj["vertex_labels"] = list(self.vertex_labels)
        if self.edge_labels is not None:
            obj["edge_labels"] = list(self.edge_labels)
        return json.dumps(obj, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        obj = json.loads(text)
        return cls(
            obj["vertices"],
            [tuple(e) for e in obj["edges"]],
            obj.get("vertex_labels"),
            obj.get("edge_labels"),
        )

    def to_dot(self) -> str:
        lines = ["graph {"]
        for v in range(self.vertex_count):
            label = self.vertex_labels[v] if self.vertex_labels else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for i, (u, v) in enumerate(self.edges):
            lines.append(f'  {u} -- {v} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def degree_sequence(g: Graph) -> List[int]:
    """Number of incident edges per vertex, indexed by vertex."""
    return [len(g.incident(v)) for v in range(g.vertex_count)]


def girth(g: Graph) -> float:
    """Length of the shortest cycle; math.inf for forests.

    BFS from every vertex: a non-tree edge met at depths d(u), d(v) closes
    a cycle through the root of length d(u)+d(v)+1, and minimizing over all
    roots is exact.
    """
    best = math.inf
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent_edge = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if dist[u] * 2 >= best:
                continue
            for ei, v in g.incident(u):
                if ei == parent_edge[u]:
                    continue
                if v in dist:
                    best = min(best, dist[u] + dist[v] + 1)
                else:
                    dist[v] = dist[u] + 1
                    parent_edge[v] = ei
                    q.append(v)
    return best


def is_connected(g: Graph) -> bool:
    """True iff one BFS covers all vertices; vacuously true when empty."""
    if g.vertex_count == 0:
        return True
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        for _, v in g.incident(u):
            if v not in seen:
                seen.add(v)
                q.append(v)
    return len(seen) == g.vertex_count


def two_core(g: Graph, erased: EdgeSubset) -> EdgeSubset:
    """Maximal subset of `erased` in which every touched vertex has
    erased-degree >= 2; equivalently the union of cycles of erased edges.

    Computed by iterated leaf stripping.  Empty iff the erased subgraph is
    a forest, so this is the ground truth for what peeling cannot repair.
    """
    if erased.size != g.edge_count:
        raise GraphError("erased subset sized for a different graph")
    alive = erased.bits
    deg = [0] * g.vertex_count
    for i in range(erased.size):
        if (alive >> i) & 1:
            u, v = g.edges[i]
            deg[u] += 1
            deg[v] += 1
    stack = [v for v in range(g.vertex_count) if deg[v] == 1]
    while stack:
        u = stack.pop()
        if deg[u] != 1:
            continue
        for ei, v in g.incident(u):
            if (alive >> ei) & 1:
                alive &= ~(1 << ei)
                deg[u] -= 1
                deg[v] -= 1
                if deg[v] == 1:
                    stack.append(v)
                break
    return EdgeSubset(erased.size, alive)
