"""Detection of reducible configurations, in a fixed order.

Each detector assumes every earlier kind is absent and returns the first
witness it finds, scanning vertices, edges and faces by increasing id. The
one exception is the second edge of a 2-edge cut, taken opposite the first
so that splits stay balanced.

Witness labels follow the vertex names used by the reductions: x_i for the
deleted vertices, y_i (or v_i) for their outside neighbours.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx

from .errors import InputInvalid
from .planar_multigraph import (components, cycle_space_labels, face_of_darts, side_of,
                               to_multigraph, trace_faces)


class Kind(str, Enum):
    DISCONNECTED = "Disconnected"
    PARALLEL_EDGE = "ParallelEdge"
    DEGREE_LEQ_ONE = "DegreeLeqOne"
    CUT_EDGE = "CutEdge"
    NON_ADJACENT_TWO_EDGE_CUT = "NonAdjacentTwoEdgeCut"
    TRIANGLE_WITH_2_VERTEX = "TriangleWith2Vertex"
    TRIANGLE = "Triangle"
    FOUR_CYCLE_WITH_2_VERTEX = "FourCycleWith2Vertex"
    FOUR_CYCLE = "FourCycle"
    TWO_VERTICES_AT_DISTANCE_1_OR_2 = "TwoVerticesAtDistance1or2"
    TWO_VERTEX_ON_5_FACE = "TwoVertexOn5Face"
    TWO_VERTICES_AT_DISTANCE_3 = "TwoVerticesAtDistance3"
    FACE_BOUNDARY_DISTANCE_4_PAIR = "FaceBoundaryDistance4Pair"
    TWO_VERTEX_ON_6_FACE = "TwoVertexOn6Face"
    TWO_VERTEX_ON_7_FACE = "TwoVertexOn7Face"
    ADJACENT_FIVE_FIVE_FACES = "AdjacentFiveFiveFaces"
    FIVE_SIX_ADJACENT_FACES = "FiveSixAdjacentFaces"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Configuration:
    kind: Kind
    witness: dict

    def describe(self):
        parts = []
        for label, value in self.witness.items():
            if isinstance(value, tuple):
                value = ",".join(str(v) for v in value)
            parts.append(f"{label}={value}")
        return " ".join(parts)


class _Scan:
    """Lazily computed views of one graph shared by the detectors."""

    def __init__(self, g):
        self.g = g

    @cached_property
    def faces(self):
        return trace_faces(self.g)

    @cached_property
    def face_at(self):
        return face_of_darts(self.faces)

    @cached_property
    def labels(self):
        return cycle_space_labels(self.g)

    @cached_property
    def neighbor_sets(self):
        return [set(self.g.neighbors(v)) for v in range(self.g.vertex_count)]

    def adjacent(self, a, b):
        return b in self.neighbor_sets[a]

    def deg(self, v):
        return self.g.degree(v)

    def cycle_faces(self, length):
        """Faces of the given length whose walk visits distinct vertices."""
        for face in self.faces:
            if face.length == length and len(set(face.vertices)) == length:
                yield face

    def pendant(self, x, excluded):
        """The neighbour of x outside `excluded`, when x has exactly one."""
        outside = [w for w in self.g.neighbors(x) if w not in excluded]
        return outside[0] if len(outside) == 1 else None

    def pendants(self, cycle, indices):
        """Outside neighbours of cycle[i] for i in indices, or None if one is missing."""
        on_cycle = set(cycle)
        found = {}
        for i in indices:
            y = self.pendant(cycle[i], on_cycle)
            if y is None or self.deg(cycle[i]) != 3:
                return None
            found[i] = y
        return found


def _rotate(walk, start):
    return [walk[(start + j) % len(walk)] for j in range(len(walk))]


## --
## -- cut structure
## --

def _disconnected(scan):
    parts = components(scan.g)
    if len(parts) > 1:
        return Configuration(Kind.DISCONNECTED, {"components": tuple(tuple(p) for p in parts)})
    return None


def _parallel_edge(scan):
    first = {}
    for e, (a, b) in enumerate(scan.g.edges):
        key = (min(a, b), max(a, b))
        if key in first:
            return Configuration(Kind.PARALLEL_EDGE, {"e": e, "twin": first[key], "u": a, "v": b})
        first[key] = e
    return None


def _degree_leq_one(scan):
    for v in range(scan.g.vertex_count):
        if scan.deg(v) <= 1:
            return Configuration(Kind.DEGREE_LEQ_ONE, {"v": v})
    return None


def _cut_edge(scan):
    for e, label in enumerate(scan.labels):
        if label == 0:
            v1, v2 = scan.g.edges[e]
            return Configuration(Kind.CUT_EDGE, {"e": e, "v1": v1, "v2": v2})
    return None


def _opposite(g, e1, candidates):
    """Candidate edge midway round the cut class from e1, for a balanced split."""
    a, b = g.edges[e1]
    graph = to_multigraph(g)
    graph.remove_edge(a, b, key=e1)
    depth = nx.single_source_shortest_path_length(graph, a)
    ordered = sorted(candidates, key=lambda e: (min(depth[v] for v in g.edges[e]), e))
    return ordered[len(ordered) // 2]


def _two_edge_cut(scan):
    g = scan.g
    groups = {}
    for e, label in enumerate(scan.labels):
        groups.setdefault(label, []).append(e)
    for label in sorted(groups, key=lambda lb: groups[lb][0]):
        if label == 0:
            continue
        members = groups[label]
        for e1 in members:
            apart = [e2 for e2 in members if not set(g.edges[e1]) & set(g.edges[e2])]
            if not apart:
                continue
            e2 = _opposite(g, e1, apart)
            side = side_of(g, g.edges[e1][0], (e1, e2))
            u1, w1 = g.edges[e1] if g.edges[e1][0] in side else reversed(g.edges[e1])
            u2, w2 = g.edges[e2] if g.edges[e2][0] in side else reversed(g.edges[e2])
            return Configuration(Kind.NON_ADJACENT_TWO_EDGE_CUT, {
                "e1": e1, "e2": e2, "u1": u1, "w1": w1, "u2": u2, "w2": w2,
                "side_u": tuple(sorted(side))})
    return None


## --
## -- short cycles
## --

def _triangles(scan):
    nbrs = scan.neighbor_sets
    for v in range(scan.g.vertex_count):
        higher = sorted(w for w in nbrs[v] if w > v)
        for i, a in enumerate(higher):
            for b in higher[i + 1:]:
                if b in nbrs[a]:
                    yield (v, a, b)


def _triangle_with_2_vertex(scan):
    for tri in _triangles(scan):
        twos = [v for v in tri if scan.deg(v) == 2]
        if twos:
            w0 = twos[0]
            w1, w2 = [v for v in tri if v != w0]
            return Configuration(Kind.TRIANGLE_WITH_2_VERTEX, {"w0": w0, "w1": w1, "w2": w2})
    return None


def _triangle(scan):
    for tri in _triangles(scan):
        witness = {f"w{i}": w for i, w in enumerate(tri)}
        for i, w in enumerate(tri):
            witness[f"u{i}"] = scan.pendant(w, set(tri))
        return Configuration(Kind.TRIANGLE, witness)
    return None


def _four_cycles(scan):
    nbrs = scan.neighbor_sets
    for v in range(scan.g.vertex_count):
        around = sorted(nbrs[v])
        for i, a in enumerate(around):
            for b in around[i + 1:]:
                for c in sorted(nbrs[a] & nbrs[b]):
                    if c != v:
                        yield (v, a, c, b)


def _four_cycle_with_2_vertex(scan):
    for cycle in _four_cycles(scan):
        for i, v in enumerate(cycle):
            if scan.deg(v) == 2:
                w = _rotate(list(cycle), i)
                return Configuration(Kind.FOUR_CYCLE_WITH_2_VERTEX,
                                     {"w1": w[0], "w2": w[1], "w3": w[2], "w4": w[3]})
    return None


def _four_cycle(scan):
    for face in scan.cycle_faces(4):
        for start in (0, 1):
            x = _rotate(list(face.vertices), start)
            y = scan.pendants(x, range(4))
            if y is None or y[0] == y[2] or scan.adjacent(y[0], y[2]):
                continue
            witness = {f"x{i}": x[i] for i in range(4)}
            witness.update({f"y{i}": y[i] for i in range(4)})
            return Configuration(Kind.FOUR_CYCLE, witness)
    return None


## --
## -- 2-vertex clusters
## --

def _two_vertices_close(scan):
    g = scan.g
    for e, (a, b) in enumerate(g.edges):
        if scan.deg(a) == 2 and scan.deg(b) == 2:
            return Configuration(Kind.TWO_VERTICES_AT_DISTANCE_1_OR_2,
                                 {"shape": "adjacent", "u": a, "v": b})
    for x in range(g.vertex_count):
        twos = sorted(w for w in scan.neighbor_sets[x] if scan.deg(w) == 2)
        if len(twos) >= 2:
            return Configuration(Kind.TWO_VERTICES_AT_DISTANCE_1_OR_2,
                                 {"shape": "common", "u": twos[0], "v": twos[1], "x": x})
    return None


def _two_vertex_on_5_face(scan):
    for face in scan.cycle_faces(5):
        walk = list(face.vertices)
        for i, v in enumerate(walk):
            if scan.deg(v) != 2:
                continue
            ring = _rotate(walk, i)
            x = {5: ring[0], 1: ring[1], 2: ring[2], 3: ring[3], 4: ring[4]}
            cycle = [x[j] for j in (1, 2, 3, 4, 5)]
            y = scan.pendants(cycle, range(4))
            if y is None:
                continue
            y = {j + 1: y[j] for j in range(4)}
            if y[2] == y[4] or scan.adjacent(y[2], y[4]):
                continue
            witness = {f"x{j}": x[j] for j in range(1, 6)}
            witness.update({f"y{j}": y[j] for j in range(1, 5)})
            return Configuration(Kind.TWO_VERTEX_ON_5_FACE, witness)
    return None


def _two_vertices_distance_3(scan):
    g = scan.g
    for a in range(g.vertex_count):
        if scan.deg(a) != 2:
            continue
        for x3 in sorted(scan.neighbor_sets[a]):
            for x4 in sorted(scan.neighbor_sets[x3] - {a}):
                for b in sorted(scan.neighbor_sets[x4] - {x3, a}):
                    if scan.deg(b) != 2:
                        continue
                    x1 = scan.pendant(a, {x3})
                    x6 = scan.pendant(b, {x4})
                    return Configuration(Kind.TWO_VERTICES_AT_DISTANCE_3, {
                        "x1": x1, "x2": a, "x3": x3, "x4": x4, "x5": b, "x6": x6})
    return None


def _face_boundary_distance_4(scan):
    for face in scan.faces:
        walk = list(face.vertices)
        n = len(walk)
        if n < 8 or len(set(walk)) != n:
            continue
        for i in range(n):
            if scan.deg(walk[i]) != 2 or scan.deg(walk[(i + 4) % n]) != 2:
                continue
            x = {j: walk[(i + j - 2) % n] for j in range(1, 8)}
            inner = [x[j] for j in range(1, 8)]
            y = scan.pendants(inner, (2, 3, 4))
            if y is None:
                continue
            y3, y4, y5 = y[2], y[3], y[4]
            if y3 == y5 or scan.adjacent(y3, y5):
                continue
            witness = {f"x{j}": x[j] for j in range(1, 8)}
            witness.update({"y3": y3, "y4": y4, "y5": y5})
            return Configuration(Kind.FACE_BOUNDARY_DISTANCE_4_PAIR, witness)
    return None


def _two_vertex_on_face(scan, length, kind, usable):
    for face in scan.cycle_faces(length):
        walk = list(face.vertices)
        for i, v in enumerate(walk):
            if scan.deg(v) != 2:
                continue
            x = _rotate(walk, i)
            y = scan.pendants(x, range(1, length))
            if y is None or not usable(scan, y):
                continue
            witness = {f"x{j}": x[j] for j in range(length)}
            witness.update({f"y{j}": y[j] for j in range(1, length)})
            return Configuration(kind, witness)
    return None


def _two_vertex_on_6_face(scan):
    # the new vertex z is joined to y1, y3 and y4
    return _two_vertex_on_face(scan, 6, Kind.TWO_VERTEX_ON_6_FACE,
                               lambda _, y: len({y[1], y[3], y[4]}) == 3)


def _two_vertex_on_7_face(scan):
    def usable(s, y):
        chords = ((1, 6), (2, 4))
        return (all(y[p] != y[q] and not s.adjacent(y[p], y[q]) for p, q in chords)
                and {y[1], y[6]} != {y[2], y[4]})
    return _two_vertex_on_face(scan, 7, Kind.TWO_VERTEX_ON_7_FACE, usable)


## --
## -- adjacent faces
## --

def _face_pair(scan, e, first_length, second_length):
    """Orient edge e so the dart leaving a lies on a first_length-face and the dart leaving b on the other."""
    a, b = scan.g.edges[e]
    for tail, head in ((a, b), (b, a)):
        near = scan.face_at[(tail, e)]
        far = scan.face_at[(head, e)]
        if near == far:
            return None
        near_face, far_face = scan.faces[near], scan.faces[far]
        if near_face.length == first_length and far_face.length == second_length:
            return tail, head, near_face, far_face
    return None


def _walk_after(face, dart):
    """Face vertices starting at the head of the given dart."""
    i = face.darts.index(dart)
    return [face.darts[(i + 1 + j) % face.length][0] for j in range(face.length)]


def _adjacent_five_five(scan):
    g = scan.g
    for e in range(g.edge_count):
        pair = _face_pair(scan, e, 5, 5)
        if pair is None:
            continue
        a, b, face_a, face_b = pair
        x = _walk_after(face_a, (a, e))          # x0 = b, ..., x4 = a
        x += _walk_after(face_b, (b, e))[1:4]    # a's successors on the other face
        if len(set(x)) != 8:
            continue
        ring_nbrs = {1: (0, 2), 2: (1, 3), 3: (2, 4), 5: (4, 6), 6: (5, 7), 7: (6, 0)}
        y = {}
        for j, (p, q) in ring_nbrs.items():
            if scan.deg(x[j]) != 3:
                break
            y[j] = scan.pendant(x[j], {x[p], x[q]})
        if len(y) != 6 or any(v is None or v in x for v in y.values()):
            continue
        # u and v each need three distinct targets; y2 = y6 is the one overlap allowed
        near, far = {y[1], y[2], y[3]}, {y[5], y[6], y[7]}
        if len(near) != 3 or len(far) != 3:
            continue
        if near & far and (y[2] != y[6] or len(near & far) != 1):
            continue
        witness = {f"x{j}": x[j] for j in range(8)}
        witness.update({f"y{j}": y[j] for j in (1, 2, 3, 5, 6, 7)})
        return Configuration(Kind.ADJACENT_FIVE_FIVE_FACES, witness)
    return None


def _five_six_adjacent(scan):
    g = scan.g
    for e in range(g.edge_count):
        pair = _face_pair(scan, e, 6, 5)
        if pair is None:
            continue
        a, b, six, five = pair
        u = _walk_after(six, (a, e))             # u0 = b, ..., u5 = a
        u += _walk_after(five, (b, e))[1:4]      # u6, u7, u8
        if len(set(u)) != 9:
            continue
        ring_nbrs = {1: (0, 2), 2: (1, 3), 3: (2, 4), 4: (3, 5), 6: (5, 7), 7: (6, 8), 8: (7, 0)}
        v = {}
        for j, (p, q) in ring_nbrs.items():
            if scan.deg(u[j]) != 3:
                break
            v[j] = scan.pendant(u[j], {u[p], u[q]})
        if len(v) != 7 or any(w is None or w in u for w in v.values()):
            continue
        chords = ((2, 3), (4, 6), (8, 1))
        if any(v[p] == v[q] or scan.adjacent(v[p], v[q]) for p, q in chords):
            continue
        if len({frozenset((v[p], v[q])) for p, q in chords}) != 3:
            continue
        witness = {f"u{j}": u[j] for j in range(9)}
        witness.update({f"v{j}": v[j] for j in (1, 2, 3, 4, 6, 7, 8)})
        return Configuration(Kind.FIVE_SIX_ADJACENT_FACES, witness)
    return None


DETECTORS = (
    (Kind.DISCONNECTED, _disconnected),
    (Kind.PARALLEL_EDGE, _parallel_edge),
    (Kind.DEGREE_LEQ_ONE, _degree_leq_one),
    (Kind.CUT_EDGE, _cut_edge),
    (Kind.NON_ADJACENT_TWO_EDGE_CUT, _two_edge_cut),
    (Kind.TRIANGLE_WITH_2_VERTEX, _triangle_with_2_vertex),
    (Kind.TRIANGLE, _triangle),
    (Kind.FOUR_CYCLE_WITH_2_VERTEX, _four_cycle_with_2_vertex),
    (Kind.FOUR_CYCLE, _four_cycle),
    (Kind.TWO_VERTICES_AT_DISTANCE_1_OR_2, _two_vertices_close),
    (Kind.TWO_VERTEX_ON_5_FACE, _two_vertex_on_5_face),
    (Kind.TWO_VERTICES_AT_DISTANCE_3, _two_vertices_distance_3),
    (Kind.FACE_BOUNDARY_DISTANCE_4_PAIR, _face_boundary_distance_4),
    (Kind.TWO_VERTEX_ON_6_FACE, _two_vertex_on_6_face),
    (Kind.TWO_VERTEX_ON_7_FACE, _two_vertex_on_7_face),
    (Kind.ADJACENT_FIVE_FIVE_FACES, _adjacent_five_five),
    (Kind.FIVE_SIX_ADJACENT_FACES, _five_six_adjacent),
)


def _check_subcubic(g):
    if g.max_degree > 3:
        v = max(range(g.vertex_count), key=g.degree)
        raise InputInvalid(f"vertex {v} has degree {g.degree(v)}; input must be subcubic")


def detect(g, kind):
    """Run the single detector for `kind`, ignoring the detection order."""
    _check_subcubic(g)
    return dict(DETECTORS)[kind](_Scan(g))


def find_configuration(g):
    """First configuration in detection order, or None for the empty graph."""
    _check_subcubic(g)
    scan = _Scan(g)
    for _, detector in DETECTORS:
        found = detector(scan)
        if found is not None:
            return found
    return None
