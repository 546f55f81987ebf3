"""Built-in graphs: the (4,g)-cage family, the Petersen graph, the two
pinned 5-disk systems, and a seeded random 4-regular generator.

Every entry re-checks its claimed regularity and girth on load, so a
transcription error in a hard-coded adjacency cannot propagate silently.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass
from typing import List, Optional

from .cubic import CubicSystem, PairingMode, PairingPolicy, build_cubic
from .graphs import Graph, degree_sequence, girth, is_connected
from .orientation import load_orientation

CAGE7_ENV_VAR = "GRAPHDSS_CAGE7_FILE"


class CatalogError(ValueError):
    pass


class MissingDataFileError(FileNotFoundError):
    pass


class GenerationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    claimed_regularity: int
    claimed_girth: int
    source: str  # "built-in" or a file path


def _checked(name: str, g: Graph, regularity: int, claimed_girth: int, source: str) -> CatalogEntry:
    degs = degree_sequence(g)
    if any(d != regularity for d in degs):
        raise CatalogError(f"{name}: not {regularity}-regular")
    gv = girth(g)
    if gv != claimed_girth:
        raise CatalogError(f"{name}: girth {gv} != claimed {claimed_girth}")
    if not is_connected(g):
        raise CatalogError(f"{name}: disconnected")
    return CatalogEntry(name, g, regularity, claimed_girth, source)


def complete_graph(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# (4,5)-cage on 19 vertices; found by exhaustive girth-constrained search
# and certified by the regularity/girth checks on load (the cage is unique)
_ROBERTSON_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
    (2, 10), (3, 11), (3, 12), (3, 13), (4, 14), (4, 15), (4, 16), (5, 8),
    (5, 11), (5, 14), (6, 9), (6, 12), (6, 15), (7, 10), (7, 13), (7, 16),
    (8, 12), (8, 16), (9, 13), (9, 17), (10, 15), (10, 18), (11, 15),
    (11, 17), (12, 18), (13, 14), (14, 18), (16, 17), (17, 18),
]


def _pg23_incidence() -> Graph:
    """Point-line incidence graph of the projective plane over the field
    with 3 elements: 13 points, 13 lines, a point on a line iff the dot
    product of homogeneous coordinates is zero mod 3."""
    triples = []
    for x in itertools.product(range(3), repeat=3):
        if x == (0, 0, 0):
            continue
        # normalize: first nonzero coordinate is 1
        lead = next(v for v in x if v)
        if lead == 1:
            triples.append(x)
    assert len(triples) == 13
    edges = []
    for p, point in enumerate(triples):
        for l, line in enumerate(triples):
            if sum(a * b for a, b in zip(point, line)) % 3 == 0:
                edges.append((p, 13 + l))
    labels = [f"p{t}" for t in triples] + [f"l{t}" for t in triples]
    return Graph(26, edges, vertex_labels=labels)


def cage(g: int, data_file: Optional[str] = None) -> CatalogEntry:
    """The (4,g)-cage for g in 3..7.

    g=7 needs an external adjacency file (JSON graph format) because the
    67-vertex cage listing is too long to embed; pass data_file or set the
    environment variable named by CAGE7_ENV_VAR.
    """
    if g == 3:
        return _checked("k5", complete_graph(5), 4, 3, "built-in")
    if g == 4:
        return _checked("k44", complete_bipartite(4, 4), 4, 4, "built-in")
    if g == 5:
        return _checked("robertson", Graph(19, _ROBERTSON_EDGES), 4, 5, "built-in")
    if g == 6:
        return _checked("pg23", _pg23_incidence(), 4, 6, "built-in")
    if g == 7:
        path = data_file or os.environ.get(CAGE7_ENV_VAR)
        if not path or not os.path.exists(path):
            raise MissingDataFileError(
                "the 67-vertex (4,7)-cage is loaded from a JSON graph file; "
                f"pass data_file= or set ${CAGE7_ENV_VAR}"
            )
        with open(path) as fh:
            graph = Graph.from_json(fh.read())
        return _checked("cage47", graph, 4, 7, path)
    raise CatalogError(f"no (4,{g})-cage in the catalog")


_PETERSEN_EDGES = [
    # outer 5-cycle, spokes, inner pentagram
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
]


def petersen() -> CatalogEntry:
    return _checked("petersen", Graph(10, _PETERSEN_EDGES), 3, 5, "built-in")


# the pinned 5-disk example: one Eulerian orientation of K5 (0-indexed)
_K5_ARCS = [
    (0, 1), (0, 3), (1, 2), (1, 4), (2, 0),
    (2, 3), (3, 1), (3, 4), (4, 0), (4, 2),
]

# per-vertex pairing that reproduces the girth-5 disk list (the block graph
# is then the Petersen graph); uniform Parallel gives the girth-3 variant
_K5_GIRTH5_MODES = {
    0: PairingMode.CROSSED,
    2: PairingMode.CROSSED,
    4: PairingMode.CROSSED,
}


def k5_reference_system(variant: str) -> CubicSystem:
    """The two pinned disk assignments of the 5-disk K5 system.

    variant="girth5": block graph isomorphic to Petersen, girth 5.
    variant="girth3": same orientation, different pairing, girth 3.
    """
    g = complete_graph(5)
    og = load_orientation(g, _K5_ARCS)
    if variant == "girth5":
        policy = PairingPolicy.from_overrides(PairingMode.PARALLEL, 5, _K5_GIRTH5_MODES)
    elif variant == "girth3":
        policy = PairingPolicy.uniform(PairingMode.PARALLEL, 5)
    else:
        raise CatalogError(f"unknown variant {variant!r}")
    return build_cubic(og, policy)


_CATALOG_BUILDERS = {
    "k5": lambda: cage(3),
    "k44": lambda: cage(4),
    "robertson": lambda: cage(5),
    "pg23": lambda: cage(6),
    "cage7": lambda: cage(7),
    "petersen": petersen,
}


def by_name(name: str) -> CatalogEntry:
    try:
        builder = _CATALOG_BUILDERS[name]
    except KeyError:
        raise CatalogError(
            f"unknown catalog graph {name!r}; available: {sorted(_CATALOG_BUILDERS)}"
        )
    return builder()


def catalog_names() -> List[str]:
    return sorted(_CATALOG_BUILDERS)


def random_4_regular(n: int, seed: int, max_tries: int = 2000) -> Graph:
    """Connected simple 4-regular graph on n vertices via the configuration
    model with rejection; deterministic per (n, seed)."""
    if n < 5:
        raise GenerationFailed("need at least 5 vertices for a 4-regular graph")
    rng = random.Random(f"4reg:{n}:{seed}")
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(4)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, sorted(edges))
        if is_connected(g):
            return g
    raise GenerationFailed(f"no simple connected 4-regular graph after {max_tries} tries")


def random_cubic(n: int, seed: int, max_tries: int = 2000) -> Graph:
    """Connected simple 3-regular graph on an even number of vertices."""
    if n < 4 or n % 2:
        raise GenerationFailed("3-regular graphs need an even vertex count >= 4")
    rng = random.Random(f"3reg:{n}:{seed}")
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, sorted(edges))
        if is_connected(g):
            return g
    raise GenerationFailed(f"no simple connected cubic graph after {max_tries} tries")
