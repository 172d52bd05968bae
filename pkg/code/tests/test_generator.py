from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongcolor.errors import InfeasibleSpec, UnknownName
from strongcolor.generator import TARGETED, GenSpec, corpus, generate, instance_names, named_instance
from strongcolor.planar_multigraph import bridges, components, degree_histogram


def test_smallest_instance_is_a_triangle():
    g = generate(GenSpec(3))
    assert (g.vertex_count, g.edge_count) == (3, 3)


def test_generation_is_deterministic():
    spec = GenSpec(40, seed=7, allow_parallel=True)
    assert generate(spec) == generate(spec)
    assert generate(spec) != generate(GenSpec(40, seed=8, allow_parallel=True))


def test_parallel_pairs_are_requested_explicitly():
    assert not generate(GenSpec(20, seed=1, allow_parallel=True)).is_simple()
    assert generate(GenSpec(20, seed=1)).is_simple()


def test_no_subdivisions_beyond_forced_ones():
    # the starting triangle keeps at most three 2-vertices, plus one forced subdivision
    g = generate(GenSpec(30, seed=3, two_vertex_fraction=Fraction(0)))
    assert degree_histogram(g)[2] <= 4


@pytest.mark.parametrize("spec", [GenSpec(2), GenSpec(10, two_vertex_fraction=Fraction(3, 2))])
def test_infeasible_specs(spec):
    with pytest.raises(InfeasibleSpec):
        generate(spec)


def test_named_instances():
    assert named_instance("dodecahedron").edge_count == 30
    assert named_instance("theta").vertex_count == 8
    assert "doubled_edge_path" in instance_names()
    with pytest.raises(UnknownName):
        named_instance("petersen")


def test_corpus():
    items = list(corpus(5, 20, seed=2))
    names = [name for name, _ in items]
    assert names[:len(instance_names())] == instance_names()
    assert len(items) == len(instance_names()) + 5
    assert all(name.startswith("random-") for name in names[len(instance_names()):])
    assert [g for _, g in corpus(5, 20, seed=2)] == [g for _, g in items]


@settings(deadline=None)
@given(st.integers(3, 60), st.integers(0, 10 ** 6), st.fractions(0, 1), st.booleans())
def test_generated_graphs_are_valid(n, seed, p2, parallel):
    g = generate(GenSpec(n, seed, p2, parallel))
    assert g.vertex_count == n
    assert g.max_degree <= 3
    assert all(a != b for a, b in g.edges)
    assert len(components(g)) == 1
    assert not bridges(g)


@pytest.mark.parametrize("name, vertices, edges", [
    ("claw", 4, 3),
    ("diamond", 4, 5),
    ("k23", 5, 6),
    ("cube_subdivided", 11, 15),
    ("dodecahedron_subdivided", 21, 31),
    ("dodecahedron_subdivided_at_vertex", 22, 32),
    ("dodecahedron_subdivided_apart", 22, 32),
    ("barrel24_subdivided", 26, 38),
    ("barrel36_subdivided", 37, 55),
    ("truncated_icosahedron", 60, 90),
])
def test_targeted_instance_sizes(name, vertices, edges):
    g = named_instance(name)
    assert (g.vertex_count, g.edge_count) == (vertices, edges)
    assert g.max_degree <= 3
    assert len(components(g)) == 1


def test_targeted_instances_are_named():
    assert set(TARGETED) <= set(instance_names())


@pytest.mark.parametrize("name", ["barrel24_subdivided", "barrel36_subdivided", "truncated_icosahedron"])
def test_large_targeted_instances_are_bridgeless(name):
    assert not bridges(named_instance(name))
