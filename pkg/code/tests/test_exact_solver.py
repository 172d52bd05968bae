import pytest
from hypothesis import given, settings

from strongcolor.errors import TooLarge
from strongcolor.exact_solver import exact_coloring, greedy_clique, strong_chromatic_index
from strongcolor.generator import named_instance
from strongcolor.planar_multigraph import build_plane_multigraph
from strongcolor.strong_coloring import conflict_graph, line_graph_square, palette_used, sees, verify_strong

from .oracles import brute_force_strong_index
from .strategies import cycle, digon, graphs, path, star


@pytest.mark.parametrize("g, expected", [
    (cycle(4), 4),
    (cycle(5), 5),
    (cycle(6), 3),
    (cycle(7), 4),
    (cycle(9), 3),
    (path(3), 2),
    (path(4), 3),
    (star(3), 3),
    (digon(), 2),
    (named_instance("k4"), 6),
    (named_instance("prism"), 9),
])
def test_strong_chromatic_index(g, expected):
    result = strong_chromatic_index(g)
    assert result.chi_s == expected
    assert verify_strong(g, result.witness) == []
    assert palette_used(result.witness) == expected


def test_empty_graph():
    result = strong_chromatic_index(build_plane_multigraph(0, [], []))
    assert result.chi_s == 0
    assert result.witness.colors == ()


def test_prism_exceeds_eight():
    result = strong_chromatic_index(named_instance("prism"), kmax=8)
    assert result.exceeds
    assert result.witness is None
    assert exact_coloring(named_instance("prism"), 8) is None


def test_clique_of_the_prism_is_every_edge():
    prism = named_instance("prism")
    clique = greedy_clique(conflict_graph(prism))
    assert sorted(clique) == list(range(9))
    assert all(sees(prism, e, f) for e in clique for f in clique if e != f)


def test_guard():
    with pytest.raises(TooLarge):
        strong_chromatic_index(named_instance("k4"), max_edges=3)
    assert strong_chromatic_index(named_instance("k4"), max_edges=3, force=True).chi_s == 6


def test_exact_coloring_fits_palette():
    coloring = exact_coloring(named_instance("cube"), 9)
    assert coloring.palette_size == 9
    assert verify_strong(named_instance("cube"), coloring) == []


@settings(max_examples=15, deadline=None)
@given(graphs(max_vertices=5))
def test_agrees_with_brute_force(g):
    assert strong_chromatic_index(g).chi_s == brute_force_strong_index(g)


@pytest.mark.parametrize("name", ["k4", "c5", "c6", "c7"])
def test_index_colors_the_square_of_the_line_graph(name):
    g = named_instance(name)
    result = strong_chromatic_index(g)
    colors = result.witness.colors
    assert all(colors[a] != colors[b] for a, b in line_graph_square(g).edges())
    assert result.chi_s == brute_force_strong_index(g)


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=10))
def test_palette_threshold_is_monotone(g):
    chi = strong_chromatic_index(g, kmax=13).chi_s
    if chi > 0:
        assert exact_coloring(g, chi - 1) is None
    for k in sorted({chi, chi + 1, 9} - {0}):
        if k >= chi:
            found = exact_coloring(g, k)
            assert found is not None
            assert verify_strong(g, found) == []
