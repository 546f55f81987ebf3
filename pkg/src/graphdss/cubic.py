"""Build the 3-regular block graph from a 2-in-2-out digraph, with its
canonical decomposition into P4 disks, plus a generic P4 decomposer.

Vertices of the cubic graph are the arcs of the digraph.  At each original
vertex v the two in-arcs are joined (the middle edge of v's disk) and each
in-arc is paired with one out-arc; the pairing is a free choice per vertex
and is exposed as a policy because different choices give different (all
valid) systems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .graphs import Graph, degree_sequence
from .orientation import OrientedGraph


class PairingMode(Enum):
    # Parallel: min-In with min-Out, max-In with max-Out.
    # Crossed:  min-In with max-Out, max-In with min-Out.
    PARALLEL = "parallel"
    CROSSED = "crossed"


@dataclass(frozen=True)
class PairingPolicy:
    """One PairingMode per vertex of the 4-regular graph."""

    modes: Tuple[PairingMode, ...]

    @classmethod
    def uniform(cls, mode: PairingMode, vertex_count: int) -> "PairingPolicy":
        return cls(tuple([mode] * vertex_count))

    @classmethod
    def from_overrides(
        cls, base: PairingMode, vertex_count: int, overrides: Dict[int, PairingMode]
    ) -> "PairingPolicy":
        modes = [base] * vertex_count
        for v, m in overrides.items():
            modes[v] = m
        return cls(tuple(modes))


class NotTwoInTwoOutError(ValueError):
    pass


class NotCubicError(ValueError):
    pass


class DecompositionFailure(Exception):
    """No P4 decomposition was found by exhaustive search."""


@dataclass(frozen=True)
class CubicSystem:
    """A 3-regular graph together with its disk decomposition.

    cubic: the 3-regular graph; vertex i of it is arc i of the source digraph.
    disks[d]: ordered 4 vertices of the d-th P4 path.
    disk_owner[d]: the source-graph vertex whose arcs make up disk d.
    arc_names[i]: (tail, head) of arc i, for display and golden comparisons.
    """

    cubic: Graph
    disks: Tuple[Tuple[int, int, int, int], ...]
    disk_owner: Tuple[int, ...]
    arc_names: Tuple[Tuple[int, int], ...]
    policy: Optional[PairingPolicy] = None

    def disk_edges(self, d: int) -> List[int]:
        """The 3 cubic-graph edge indices of disk d, in path order."""
        p = self.disks[d]
        return [self.cubic.edge_index(p[i], p[i + 1]) for i in range(3)]

    def edge_owner(self) -> List[int]:
        """Map cubic edge index -> owning disk index."""
        owner = [-1] * self.cubic.edge_count
        for d in range(len(self.disks)):
            for ei in self.disk_edges(d):
                owner[ei] = d
        return owner

    def to_json(self) -> str:
        obj = json.loads(self.cubic.to_json())
        obj["disks"] = [list(d) for d in self.disks]
        obj["disk_owner"] = list(self.disk_owner)
        obj["arc_names"] = [list(a) for a in self.arc_names]
        if self.policy is not None:
            obj["policy"] = [m.value for m in self.policy.modes]
        return json.dumps(obj, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "CubicSystem":
        obj = json.loads(text)
        g = Graph(obj["vertices"], [tuple(e) for e in obj["edges"]])
        policy = None
        if "policy" in obj:
            policy = PairingPolicy(tuple(PairingMode(m) for m in obj["policy"]))
        return cls(
            g,
            tuple(tuple(d) for d in obj["disks"]),
            tuple(obj["disk_owner"]),
            tuple(tuple(a) for a in obj["arc_names"]),
            policy,
        )


def _canonical_path(path: Sequence[int], arc_names: Sequence[Tuple[int, int]]):
    """Orient a disk path to start at the lexicographically smaller end arc."""
    if arc_names[path[-1]] < arc_names[path[0]]:
        path = list(reversed(path))
    return tuple(path)


def build_cubic(gd: OrientedGraph, policy: Union[PairingPolicy, PairingMode]) -> CubicSystem:
    """Construct the cubic graph and its disks from a 2-in-2-out digraph.

    For each source vertex v with in-arcs a = min In(v), b = max In(v)
    (min/max over tail indices) and out-arcs c = min Out(v), d = max Out(v)
    (over head indices): the middle edge {a,b} always exists; Parallel adds
    {a,c} and {b,d} (disk path c-a-b-d), Crossed adds {a,d} and {b,c}.
    """
    if not gd.is_two_in_two_out():
        raise NotTwoInTwoOutError("digraph must have in-degree = out-degree = 2")
    n = gd.vertex_count
    if isinstance(policy, PairingMode):
        policy = PairingPolicy.uniform(policy, n)
    if len(policy.modes) != n:
        raise ValueError("policy must assign one mode per vertex")

    ins: List[List[int]] = [[] for _ in range(n)]
    outs: List[List[int]] = [[] for _ in range(n)]
    for i, (t, h) in enumerate(gd.arcs):
        outs[t].append(i)
        ins[h].append(i)

    edges: List[Tuple[int, int]] = []
    disks: List[Tuple[int, int, int, int]] = []
    for v in range(n):
        a, b = sorted(ins[v], key=lambda i: gd.arcs[i][0])
        c, d = sorted(outs[v], key=lambda i: gd.arcs[i][1])
        if policy.modes[v] is PairingMode.PARALLEL:
            path = [c, a, b, d]
        else:
            path = [d, a, b, c]
        path = _canonical_path(path, gd.arcs)
        disks.append(path)
        edges.extend((path[i], path[i + 1]) for i in range(3))

    cubic = Graph(2 * n, edges)
    return CubicSystem(
        cubic=cubic,
        disks=tuple(disks),
        disk_owner=tuple(range(n)),
        arc_names=gd.arcs,
        policy=policy,
    )


def verify_disk_decomposition(sys: CubicSystem) -> bool:
    """True iff the disks are vertex-paths on 3 edges, pairwise edge-disjoint,
    and together cover every edge of the cubic graph."""
    g = sys.cubic
    seen = set()
    for path in sys.disks:
        if len(set(path)) != 4:
            return False
        for i in range(3):
            u, v = path[i], path[i + 1]
            if not g.has_edge(u, v):
                return False
            ei = g.edge_index(u, v)
            if ei in seen:
                return False
            seen.add(ei)
    return len(seen) == g.edge_count


def _perfect_matching(g: Graph) -> Optional[List[int]]:
    """Perfect matching as a list of edge indices, by backtracking over the
    lowest-index unmatched vertex; None if no perfect matching exists."""
    matched = [False] * g.vertex_count

    def extend(chosen: List[int]) -> Optional[List[int]]:
        try:
            u = matched.index(False)
        except ValueError:
            return chosen
        for ei, v in g.incident(u):
            if not matched[v]:
                matched[u] = matched[v] = True
                chosen.append(ei)
                result = extend(chosen)
                if result is not None:
                    return result
                chosen.pop()
                matched[u] = matched[v] = False
        return None

    return extend([])


def _p4_cover_backtrack(g: Graph) -> Optional[List[Tuple[int, int, int, int]]]:
    """Exhaustive search for an edge-disjoint P4 cover of a cubic graph."""
    m = g.edge_count
    used = [False] * m

    def free_edges_at(v: int) -> List[Tuple[int, int]]:
        return [(ei, w) for ei, w in g.incident(v) if not used[ei]]

    def extend(paths: List[Tuple[int, int, int, int]]) -> Optional[
        List[Tuple[int, int, int, int]]
    ]:
        try:
            first = used.index(False)
        except ValueError:
            return paths
        a, b = g.edges[first]
        used[first] = True
        # grow a 3-edge path whose first edge is the lowest free edge
        for p0, p1 in ((a, b), (b, a)):
            for e2, p2 in free_edges_at(p1):
                if p2 == p0:
                    continue
                used[e2] = True
                for e3, p3 in free_edges_at(p2):
                    if p3 in (p0, p1):
                        continue
                    used[e3] = True
                    paths.append((p0, p1, p2, p3))
                    result = extend(paths)
                    if result is not None:
                        return result
                    paths.pop()
                    used[e3] = False
                used[e2] = False
        used[first] = False
        return None

    return extend([])


def decompose_p4(g: Graph) -> List[Tuple[int, int, int, int]]:
    """Decompose a 3-regular graph into edge-disjoint paths on 3 edges.

    Strategy: find a perfect matching; the complement is a 2-factor; orient
    each of its cycles and, for each matching edge {u,v}, take the path
    succ(u)-u-v-succ(v).  Falls back to exhaustive search when no perfect
    matching exists.  Raises DecompositionFailure if nothing works.
    """
    if any(d != 3 for d in degree_sequence(g)):
        raise NotCubicError("graph is not 3-regular")

    matching = _perfect_matching(g)
    if matching is not None:
        in_matching = set(matching)
        cycle_adj = [
            [w for ei, w in g.incident(u) if ei not in in_matching]
            for u in range(g.vertex_count)
        ]
        # orient every cycle of the 2-factor; cycles have length >= 3
        succ: Dict[int, int] = {}
        visited = [False] * g.vertex_count
        for start in range(g.vertex_count):
            if visited[start]:
                continue
            prev, u = -1, start
            while True:
                visited[u] = True
                w = cycle_adj[u][0] if cycle_adj[u][0] != prev else cycle_adj[u][1]
                succ[u] = w
                prev, u = u, w
                if u == start:
                    break
        paths = []
        for ei in matching:
            u, v = g.edges[ei]
            paths.append((succ[u], u, v, succ[v]))
    else:
        paths = _p4_cover_backtrack(g)
        if paths is None:
            raise DecompositionFailure("no P4 decomposition found")
    # canonical direction: smaller end vertex first
    return [tuple(reversed(p)) if p[-1] < p[0] else tuple(p) for p in paths]
