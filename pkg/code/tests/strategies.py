from fractions import Fraction

from hypothesis import strategies as st

from strongcolor.generator import GenSpec, generate, named_instance
from strongcolor.planar_multigraph import build_plane_multigraph, embed_edge_list, splice


def cycle(n):
    """C_n with edge i joining i and i+1."""
    return build_plane_multigraph(n, [(i, (i + 1) % n) for i in range(n)],
                                  [[(i - 1) % n, i] for i in range(n)])


def path(n):
    return embed_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return embed_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def two_triangles(bridged=False):
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    if bridged:
        edges.append((2, 3))
    return embed_edge_list(6, edges)


def digon():
    return embed_edge_list(2, [(0, 1), (0, 1)])


NAMED = ("prism", "k4", "cube", "dodecahedron", "c5", "c6", "c7", "theta", "doubled_edge_path")


@st.composite
def graphs(draw, min_vertices=3, max_vertices=24, allow_parallel=None):
    """Random connected bridgeless subcubic plane multigraphs."""
    n = draw(st.integers(min_vertices, max_vertices))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    p2 = draw(st.sampled_from([Fraction(0), Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)]))
    parallel = draw(st.booleans()) if allow_parallel is None else allow_parallel
    return generate(GenSpec(n, seed, p2, parallel))


@st.composite
def damaged_graphs(draw, max_vertices=16):
    """Random graphs with a few edges deleted, so bridges and several components occur."""
    g = draw(graphs(max_vertices=max_vertices))
    doomed = draw(st.sets(st.integers(0, g.edge_count - 1), max_size=3))
    return splice(g, remove_edges=doomed).graph


named_graphs = st.sampled_from(NAMED).map(named_instance)
