import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from strongcolor.errors import (AlreadyColored, ColorOutOfRange, FrontierTooLarge, InputInvalid,
                                InvalidColoring, UncoloredEdge)
from strongcolor.generator import named_instance
from strongcolor.strong_coloring import (PartialColoring, Violation, available_colors, conflict_graph,
                                         extend_by_search, greedy_bound, greedy_strong,
                                         induced_matching_lower, is_good, line_graph_square,
                                         palette_used, sdr_extend, search_extension, sees, used_at,
                                         used_other, verify_strong)

from .oracles import naive_sees
from .strategies import cycle, graphs, path, star


def six_cycle_coloring():
    return PartialColoring(3, tuple(e % 3 + 1 for e in range(6)))


def test_sees():
    g = cycle(6)
    assert sees(g, 0, 1)
    assert sees(g, 0, 2)
    assert not sees(g, 0, 3)
    assert not sees(g, 0, 0)
    assert sees(path(4), 0, 2)


def test_color_out_of_palette_is_rejected():
    with pytest.raises(ColorOutOfRange):
        PartialColoring(3, (1, 4))


def test_partial_coloring_updates():
    partial = PartialColoring.empty(3).with_colors({0: 2, 2: 5})
    assert partial.colors == (2, None, 5)
    assert partial.uncolored() == [1]
    assert not partial.is_total()
    assert partial.with_colors({1: 1}).is_total()


def test_four_cycle_needs_four_colors():
    violations = verify_strong(cycle(4), PartialColoring(9, (1, 2, 1, 2)))
    assert violations == [Violation(0, 2, 1), Violation(1, 3, 2)]


def test_six_cycle_three_coloring_is_strong():
    assert verify_strong(cycle(6), six_cycle_coloring()) == []


def test_verify_needs_a_total_coloring():
    with pytest.raises(UncoloredEdge) as info:
        verify_strong(cycle(6), PartialColoring.empty(6).with_colors({e: 1 for e in range(5)}))
    assert info.value.edge == 5


def test_available_and_used_colors():
    g = star(3)
    partial = PartialColoring(9, (None, 1, 2))
    assert available_colors(g, partial, 0) == set(range(3, 10))
    assert used_at(g, partial, 0) == {1, 2}
    assert used_other(g, partial, 0, 1) == {2}
    with pytest.raises(AlreadyColored):
        available_colors(g, partial, 1)


def test_is_good_ignores_uncolored_edges():
    g = cycle(6)
    assert is_good(g, PartialColoring(9, (1, None, None, 1, None, None)))
    assert not is_good(g, PartialColoring(9, (1, None, 1, None, None, None)))


def test_sdr():
    assert sdr_extend([(0, {1, 2}), (1, {1})]) == {0: 2, 1: 1}
    assert sdr_extend([(0, {1}), (1, {1})]) is None
    assert sdr_extend([]) == {}


def test_search_extension_on_six_cycle():
    g = cycle(6)
    found = search_extension(g, PartialColoring.empty(6, 3), range(6))
    assert found.coloring.is_total()
    assert verify_strong(g, found.coloring) == []
    assert search_extension(g, PartialColoring.empty(6, 2), range(6)).coloring is None


def test_search_extension_keeps_existing_colors():
    g = cycle(6)
    partial = PartialColoring(3, (3, None, None, None, None, None))
    found = search_extension(g, partial, range(1, 6)).coloring
    assert found.colors[0] == 3
    assert verify_strong(g, found) == []


def test_extend_by_search():
    g = cycle(7)
    assert extend_by_search(g, PartialColoring.empty(7, 3), range(7)) is None
    assert verify_strong(g, extend_by_search(g, PartialColoring.empty(7, 4), range(7))) == []


def test_search_extension_budget():
    outcome = search_extension(cycle(6), PartialColoring.empty(6, 3), range(6), node_limit=1)
    assert outcome.coloring is None
    assert outcome.budget_exhausted


def test_search_extension_rejects_bad_requests():
    g = cycle(6)
    with pytest.raises(FrontierTooLarge):
        search_extension(g, PartialColoring.empty(6), range(6), max_frontier=5)
    with pytest.raises(AlreadyColored):
        search_extension(g, PartialColoring(9, (1,) + (None,) * 5), range(6))
    with pytest.raises(InvalidColoring):
        search_extension(g, PartialColoring(9, (1, 1) + (None,) * 4), range(2, 6))


def test_greedy():
    assert greedy_bound(3) == 13
    assert palette_used(greedy_strong(named_instance("prism"))) == 9
    with pytest.raises(InputInvalid):
        greedy_strong(cycle(4), order=[0, 0, 1, 2])


def test_induced_matching():
    assert induced_matching_lower(cycle(6), six_cycle_coloring()) == {0, 3}
    with pytest.raises(InvalidColoring):
        induced_matching_lower(cycle(4), PartialColoring(9, (1, 2, 1, 2)))


@settings(deadline=None)
@given(graphs())
def test_conflict_graph_matches_definition(g):
    conflicts = conflict_graph(g)
    for e in range(g.edge_count):
        assert len(conflicts.sees[e]) <= 12
        assert conflicts.sees[e] == {f for f in range(g.edge_count) if naive_sees(g, e, f)}


@settings(deadline=None)
@given(graphs(allow_parallel=False))
def test_conflict_graph_is_square_of_line_graph(g):
    square = line_graph_square(g)
    conflicts = conflict_graph(g)
    for e in range(g.edge_count):
        assert set(square.neighbors(e)) == conflicts.sees[e]


@settings(deadline=None)
@given(graphs())
def test_greedy_stays_within_bound(g):
    coloring = greedy_strong(g)
    assert verify_strong(g, coloring) == []
    assert palette_used(coloring) <= greedy_bound(3)


@settings(deadline=None)
@given(graphs(allow_parallel=False))
def test_colors_on_the_two_sides_of_an_edge_are_disjoint(g):
    coloring = greedy_strong(g)
    for e, (u, v) in enumerate(g.edges):
        assert not used_other(g, coloring, u, e) & used_other(g, coloring, v, e)


@settings(deadline=None)
@given(st.lists(st.sets(st.integers(1, 6), max_size=6), max_size=6))
def test_sdr_agrees_with_brute_force(sets):
    demands = list(enumerate(sets))
    found = sdr_extend(demands)
    exists = any(len(set(pick)) == len(pick) for pick in itertools.product(*(sorted(s) for s in sets)))
    assert (found is not None) == exists
    if found is not None:
        assert len(set(found.values())) == len(sets)
        assert all(found[e] in colors for e, colors in demands)


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=8), st.data())
def test_search_agrees_with_exhaustive_enumeration(g, data):
    assume(g.edge_count > 0)
    frontier = data.draw(st.lists(st.sampled_from(range(g.edge_count)), unique=True, max_size=6))
    k = data.draw(st.integers(1, 5))
    partial = PartialColoring.empty(g.edge_count, k)
    rest = [e for e in range(g.edge_count) if e not in frontier]
    if rest:
        partial = partial.with_colors({rest[0]: 1})
    fixed = {e: c for e, c in enumerate(partial.colors) if c is not None}

    pairs = [(e, f) for e in range(g.edge_count) for f in range(e + 1, g.edge_count) if naive_sees(g, e, f)]

    def fits(colors):
        chosen = {**fixed, **dict(zip(frontier, colors))}
        return all(chosen[e] != chosen[f] for e, f in pairs if e in chosen and f in chosen)

    exists = any(fits(colors) for colors in itertools.product(range(1, k + 1), repeat=len(frontier)))
    found = extend_by_search(g, partial, frontier)
    assert (found is not None) == exists
    if found is not None:
        assert is_good(g, found)
        assert all(found.colors[e] is not None for e in frontier)
        assert all(found.colors[e] == c for e, c in fixed.items())


@settings(deadline=None)
@given(graphs(max_vertices=12), st.data())
def test_available_colors_match_definition(g, data):
    assume(g.edge_count > 0)
    coloring = greedy_strong(g)
    e = data.draw(st.integers(0, g.edge_count - 1))
    partial = PartialColoring(coloring.palette_size, coloring.colors[:e] + (None,) + coloring.colors[e + 1:])
    expected = {c for c in range(1, partial.palette_size + 1)
                if all(partial.colors[f] != c for f in range(g.edge_count) if naive_sees(g, e, f))}
    assert available_colors(g, partial, e) == expected
    assert coloring.colors[e] in expected
