import pytest

from graphdss.catalog import (
    CatalogError,
    GenerationFailed,
    MissingDataFileError,
    by_name,
    cage,
    catalog_names,
    k5_reference_system,
    petersen,
    random_4_regular,
    random_cubic,
)
from graphdss.cubic import decompose_p4
from graphdss.graphs import degree_sequence, girth, is_connected


@pytest.mark.parametrize(
    "g,vertices,edges",
    [(3, 5, 10), (4, 8, 16), (5, 19, 38), (6, 26, 52)],
)
def test_cage_shapes(g, vertices, edges):
    entry = cage(g)
    assert entry.graph.vertex_count == vertices
    assert entry.graph.edge_count == edges
    assert all(d == 4 for d in degree_sequence(entry.graph))
    assert girth(entry.graph) == g
    assert is_connected(entry.graph)


def test_cage7_missing_file(monkeypatch):
    monkeypatch.delenv("GRAPHDSS_CAGE7_FILE", raising=False)
    with pytest.raises(MissingDataFileError):
        cage(7)


def test_cage_out_of_range():
    with pytest.raises(CatalogError):
        cage(8)


def test_pg23_incidence_structure():
    g = cage(6).graph
    # bipartite points/lines split at index 13; every edge crosses it
    assert all((u < 13) != (v < 13) for u, v in g.edges)
    assert g.edge_count == 52


def test_petersen_entry():
    entry = petersen()
    assert girth(entry.graph) == 5
    assert all(d == 3 for d in degree_sequence(entry.graph))
    assert len(decompose_p4(entry.graph)) == 5


def test_k5_reference_system_variants():
    assert girth(k5_reference_system("girth5").cubic) == 5
    assert girth(k5_reference_system("girth3").cubic) == 3
    with pytest.raises(CatalogError):
        k5_reference_system("girth7")


def test_by_name():
    assert by_name("k5").graph.vertex_count == 5
    with pytest.raises(CatalogError):
        by_name("nope")
    assert "petersen" in catalog_names()


def test_random_4_regular_properties():
    for seed in range(8):
        g = random_4_regular(6 + seed, seed=seed)
        assert all(d == 4 for d in degree_sequence(g))
        assert is_connected(g)


def test_random_4_regular_deterministic():
    assert random_4_regular(10, seed=4).edges == random_4_regular(10, seed=4).edges


def test_random_4_regular_minimum_size():
    assert random_4_regular(5, seed=0).edge_count == 10  # forced to be K5
    with pytest.raises(GenerationFailed):
        random_4_regular(4, seed=0)


def test_random_cubic_properties():
    for seed in range(5):
        g = random_cubic(10, seed=seed)
        assert all(d == 3 for d in degree_sequence(g))
        assert is_connected(g)
    with pytest.raises(GenerationFailed):
        random_cubic(7, seed=0)
