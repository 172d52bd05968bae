from fractions import Fraction

import pytest
from hypothesis import given, settings

from strongcolor.configurations import Kind
from strongcolor.discharging import audit, charges, face_charge_floor
from strongcolor.errors import Disconnected, HasBridge
from strongcolor.generator import named_instance
from strongcolor.planar_multigraph import face_of_darts

from .strategies import cycle, digon, graphs, path, two_triangles


@pytest.mark.parametrize("name", ["k4", "prism", "cube", "dodecahedron", "c5", "theta"])
def test_total_charge_is_minus_twelve(name):
    report = charges(named_instance(name))
    assert report.total_initial == -12
    assert report.total_final == -12


def test_digon_charges():
    report = charges(digon())
    assert report.face_initial == (-4, -4)
    assert report.vertex_final == (0, 0)
    assert report.total_final == -12


def test_dodecahedron_faces_trade_evenly():
    report = charges(named_instance("dodecahedron"))
    assert set(report.face_initial) == {-1}
    assert set(report.face_final) == {-1}


def test_five_cycle_vertices_are_paid_by_both_faces():
    report = charges(cycle(5))
    assert report.vertex_initial == (-2,) * 5
    assert report.vertex_final == (0,) * 5
    assert report.face_final == (-6, -6)


def test_charges_need_a_connected_bridgeless_graph():
    with pytest.raises(Disconnected):
        charges(two_triangles())
    with pytest.raises(HasBridge):
        charges(path(3))


def test_face_charge_floor():
    assert face_charge_floor(5) == 0
    assert face_charge_floor(6) == 0
    assert face_charge_floor(7) == Fraction(2, 5)
    assert face_charge_floor(8) == Fraction(1, 5)
    assert face_charge_floor(10) == 1
    with pytest.raises(ValueError):
        face_charge_floor(4)


@pytest.mark.parametrize("name, failing, kind", [
    ("prism", "no triangles", Kind.TRIANGLE),
    ("dodecahedron", "no two 5-faces share an edge", Kind.ADJACENT_FIVE_FIVE_FACES),
    ("c6", "no 2-vertex on a 6-cycle", Kind.NON_ADJACENT_TWO_EDGE_CUT),
])
def test_audit_named_instances(name, failing, kind):
    report = audit(named_instance(name))
    assert failing in report.failing
    assert report.detected.kind is kind
    assert report.consistent


def test_audit_of_the_dodecahedron_keeps_other_predicates():
    predicates = audit(named_instance("dodecahedron")).predicates
    assert predicates["no triangles"]
    assert predicates["no 4-cycles"]
    assert predicates["no 5-face shares an edge with a 6-face"]


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=40))
def test_generated_graphs_audit_consistently(g):
    report = audit(g)
    assert report.consistent
    assert report.charges.total_final == -12
    assert report.floor_breaches == ()


@settings(max_examples=40, deadline=None)
@given(graphs(max_vertices=30))
def test_faces_other_than_pentagons_follow_the_closed_form(g):
    report = charges(g)
    faces = list(report.faces)
    face_at = face_of_darts(faces)
    for i, face in enumerate(faces):
        if face.length == 5:
            continue
        twos = sum(g.degree(v) == 2 for v in face.vertices)
        fives = sum(faces[face_at[(g.other(e, t), e)]].length == 5 for t, e in face.darts)
        assert report.face_final[i] == face.length - 6 - twos - Fraction(fives, 5)
