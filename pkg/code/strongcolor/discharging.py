"""Charges 2d(v)-6 and d(f)-6, the two redistribution rules, and the audit.

Rule 1: every 2-vertex receives 1 from each face, once per incidence.
Rule 2: every 5-face receives 1/5 from the face across each of its edges.
"""
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .configurations import find_configuration
from .errors import Disconnected, DetectorGap, HasBridge
from .io_formats import serialize_graph
from .planar_multigraph import (boundary_distance, bridges, components, face_of_darts, structure_report,
                               to_networkx, trace_faces)

FIFTH = Fraction(1, 5)


@dataclass(frozen=True)
class ChargeReport:
    faces: tuple
    vertex_initial: tuple
    vertex_final: tuple
    face_initial: tuple
    face_final: tuple

    @property
    def total_initial(self):
        return sum(self.vertex_initial, Fraction(0)) + sum(self.face_initial, Fraction(0))

    @property
    def total_final(self):
        return sum(self.vertex_final, Fraction(0)) + sum(self.face_final, Fraction(0))


@dataclass(frozen=True)
class AuditReport:
    predicates: dict          # predicate name -> holds
    detected: object          # Configuration found by the detector
    charges: ChargeReport
    floor_breaches: tuple     # faces whose final charge is below their closed-form floor

    @property
    def failing(self):
        return [name for name, holds in self.predicates.items() if not holds]

    @property
    def consistent(self):
        return bool(self.failing) == (self.detected is not None)


def _require_charge_domain(g):
    if len(components(g)) > 1:
        raise Disconnected(f"charges need a connected graph, got {len(components(g))} components")
    cut = bridges(g)
    if cut:
        raise HasBridge(f"charges need a bridgeless graph; edge {min(cut)} is a bridge")


def charges(g):
    _require_charge_domain(g)
    faces = trace_faces(g)
    face_at = face_of_darts(faces)
    vertex_initial = tuple(Fraction(2 * g.degree(v) - 6) for v in range(g.vertex_count))
    face_initial = tuple(Fraction(f.length - 6) for f in faces)
    vertex_final = list(vertex_initial)
    face_final = list(face_initial)

    for i, face in enumerate(faces):
        for v in face.vertices:
            if g.degree(v) == 2:
                vertex_final[v] += 1
                face_final[i] -= 1

    for i, face in enumerate(faces):
        if face.length != 5:
            continue
        for tail, e in face.darts:
            across = face_at[(g.other(e, tail), e)]
            if across != i:
                face_final[across] -= FIFTH
                face_final[i] += FIFTH

    return ChargeReport(tuple(faces), vertex_initial, tuple(vertex_final),
                        face_initial, tuple(face_final))


def face_charge_floor(k):
    """Lowest final charge of a k-face once the structural predicates hold."""
    if k in (5, 6):
        return Fraction(0)
    if k == 7:
        return Fraction(2, 5)
    if k >= 8:
        return k - 6 - k // 5 - Fraction(k // 2, 5)
    raise ValueError(f"no floor for faces of length {k}")


def _predicates(g, faces, face_at):
    report = structure_report(g)
    twos = report.two_vertices
    cycles = report.short_cycles
    five_faces = {i for i, f in enumerate(faces) if f.length == 5}
    six_faces = {i for i, f in enumerate(faces) if f.length == 6}

    def across(i, dart):
        tail, e = dart
        return face_at[(g.other(e, tail), e)]

    def faces_touch(first, second):
        return any(across(i, d) in second and across(i, d) != i for i in first for d in faces[i].darts)

    simple = to_networkx(g)
    close_pairs = any(w in twos and w != u
                      for u in twos for w in nx.single_source_shortest_path_length(simple, u, cutoff=3))
    boundary_close = False
    for face in faces:
        on_face = sorted(twos & set(face.vertices))
        if any(boundary_distance(face, u, w) < 5 for i, u in enumerate(on_face) for w in on_face[i + 1:]):
            boundary_close = True

    return {
        "no parallel edges": g.is_simple(),
        "minimum degree at least 2": all(g.degree(v) >= 2 for v in range(g.vertex_count)),
        "no triangles": not any(len(c) == 3 for c in cycles),
        "no 4-cycles": not any(len(c) == 4 for c in cycles),
        "no 2-vertex on a 5-cycle": not any(len(c) == 5 and twos & set(c) for c in cycles),
        "2-vertices at distance at least 4": not close_pairs,
        "2-vertices on a face at boundary distance at least 5": not boundary_close,
        "no 2-vertex on a 6-cycle": not any(len(c) == 6 and twos & set(c) for c in cycles),
        "no 2-vertex on a 7-face": not any(f.length == 7 and twos & set(f.vertices) for f in faces),
        "no two 5-faces share an edge": not faces_touch(five_faces, five_faces),
        "no 5-face shares an edge with a 6-face": not faces_touch(five_faces, six_faces),
    }


def audit(g):
    """Evaluate the structural predicates and cross-check them with the detector.

    Raises:
        DetectorGap: every predicate holds (then no final charge is negative,
            which the total of -12 forbids), or the detector finds nothing.
    """
    report = charges(g)
    faces = list(report.faces)
    face_at = face_of_darts(faces)
    predicates = _predicates(g, faces, face_at)
    detected = find_configuration(g)

    breaches = []
    for i, face in enumerate(faces):
        k = face.length
        if k < 7:
            continue
        twos = sum(g.degree(v) == 2 for v in face.vertices)
        fives = sum(faces[face_at[(g.other(e, t), e)]].length == 5 for t, e in face.darts)
        local_ok = (twos == 0 if k == 7 else twos <= k // 5) and fives <= k // 2
        if local_ok and report.face_final[i] < face_charge_floor(k):
            breaches.append(i)

    result = AuditReport(predicates, detected, report, tuple(breaches))
    if not result.failing or detected is None:
        raise DetectorGap(
            f"audit found failing predicates {result.failing} and detector answer "
            f"{detected.kind if detected else None}", serialize_graph(g))
    return result
