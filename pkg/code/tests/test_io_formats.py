from pathlib import Path

import networkx as nx
import pytest

from strongcolor.errors import ColorOutOfRange, LoopEdge, PmgSyntaxError, RotationMismatch
from strongcolor.generator import named_instance
from strongcolor.io_formats import parse_coloring, parse_graph, serialize_coloring, serialize_graph
from strongcolor.planar_multigraph import components, to_multigraph, trace_faces
from strongcolor.strong_coloring import PartialColoring

TRIANGLE = """\
pmg 1   # a triangle
v 3
E 0 1
E 1 2
E 2 0
R 0: 0 2
R 1: 0 1
R 2: 1 2
"""


def test_parse_pmg():
    g = parse_graph(TRIANGLE)
    assert g.edges == ((0, 1), (1, 2), (2, 0))
    assert g.rotations == ((0, 2), (0, 1), (1, 2))


def test_pmg_keeps_the_embedding():
    g = named_instance("dodecahedron")
    assert parse_graph(serialize_graph(g)) == g


def test_single_line_form():
    g = parse_graph("pmg 1 / v 3 / E 0 1 / R 0: 0 / R 1: 0")
    assert g.vertex_count == 3
    assert g.rotations[2] == ()


def test_edge_list_is_embedded():
    g = parse_graph("0 1\n1 2\n2 0\n")
    assert g.vertex_count == 3
    assert sorted(f.length for f in trace_faces(g)) == [3, 3]
    assert parse_graph(serialize_graph(g, "el")).edges == g.edges


@pytest.mark.parametrize("text, error", [
    ("pmg 2\nv 1\n", PmgSyntaxError),
    ("pmg 1\nE 0 1\n", PmgSyntaxError),
    ("pmg 1\nv 2\nE 0 x\n", PmgSyntaxError),
    ("pmg 1\nv 2\nQ 1\n", PmgSyntaxError),
    ("pmg 1\nv 2\nE 0 1\nR 0: 0\nR 0: 0\n", PmgSyntaxError),
    ("pmg 1\nv 2\nE 0 1\nR 0: 0\n", RotationMismatch),
    ("0 1 2\n", PmgSyntaxError),
    ("0 0\n", LoopEdge),
])
def test_malformed_graphs(text, error):
    with pytest.raises(error):
        parse_graph(text)


def test_syntax_errors_name_the_line():
    with pytest.raises(PmgSyntaxError, match="line 3"):
        parse_graph("pmg 1\nv 2\nE 0\n")


def test_coloring_files():
    coloring = PartialColoring(9, (1, None, 9))
    text = serialize_coloring(coloring)
    assert text == "k 9\nc 0 1\nc 2 9\n"
    assert parse_coloring(text, edge_count=3) == coloring
    assert parse_coloring("k 3\nc 1 2\n").colors == (None, 2)


@pytest.mark.parametrize("text, error", [
    ("c 0 1\n", PmgSyntaxError),
    ("k 3\nc 0 4\n", ColorOutOfRange),
    ("k 3\nc 0 1\nc 0 2\n", PmgSyntaxError),
    ("k 3\nc 5 1\n", PmgSyntaxError),
])
def test_malformed_colorings(text, error):
    with pytest.raises(error):
        parse_coloring(text, edge_count=2)


INSTANCE_DIR = Path(__file__).parents[2] / "data" / "instances"


@pytest.mark.parametrize("path", sorted(INSTANCE_DIR.glob("*.pmg")), ids=lambda p: p.stem)
def test_instance_files_match_named_instances(path):
    g = parse_graph(path.read_text())
    # Euler's formula holds for a plane embedding
    assert g.vertex_count - g.edge_count + len(trace_faces(g)) == 1 + len(components(g))
    assert nx.is_isomorphic(to_multigraph(g), to_multigraph(named_instance(path.stem)))


def test_instance_files_cover_the_basic_shapes():
    stems = {path.stem for path in INSTANCE_DIR.glob("*.pmg")}
    assert {"prism", "k4", "cube", "dodecahedron", "theta", "c5", "c6", "c7", "doubled_edge_path"} <= stems
