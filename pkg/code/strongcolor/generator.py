"""Named instances and seeded random subcubic plane multigraphs.

Random graphs grow from a triangle by face-local moves, each of which keeps
the rotation system planar and every degree at most 3:

    subdivide    split an edge with a new 2-vertex
    handle       subdivide two edges of one face and join the new vertices across it
    chord        join two non-adjacent vertices of degree <= 2 across a common face
    parallel     subdivide an edge twice and double the middle edge
"""
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
import numpy as np

from .configurations import Kind
from .errors import InfeasibleSpec, UnknownName
from .planar_multigraph import build_plane_multigraph, embed_edge_list


@dataclass(frozen=True)
class GenSpec:
    target_vertices: int
    seed: int = 0
    two_vertex_fraction: Fraction = Fraction(1, 4)
    allow_parallel: bool = False


def _theta():
    # three internally disjoint paths of length 3 between 0 and 1
    edges = []
    for p in range(3):
        a, b = 2 + 2 * p, 3 + 2 * p
        edges += [(0, a), (a, b), (b, 1)]
    return nx.Graph(edges)


def _cube():
    # vertex bits are the coordinates, 4 = x, 2 = y, 1 = z
    return nx.Graph((u, u ^ bit) for u in range(8) for bit in (1, 2, 4))


def _barrel(k, rings):
    """Cubic drum: k-gons at both ends, `rings` cycles of 2k vertices between.

    The faces along the ends are pentagons and those between two rings are
    hexagons; k = 5 with one ring is the dodecahedron.
    """
    top = list(range(k))
    levels = [[k + 2 * k * i + p for p in range(2 * k)] for i in range(rings)]
    bottom = [k + 2 * k * rings + j for j in range(k)]
    graph = nx.cycle_graph(top)
    nx.add_cycle(graph, bottom)
    for level in levels:
        nx.add_cycle(graph, level)
    graph.add_edges_from((top[j], levels[0][2 * j]) for j in range(k))
    for i in range(rings - 1):
        graph.add_edges_from((levels[i][p], levels[i + 1][p]) for p in range((i + 1) % 2, 2 * k, 2))
    graph.add_edges_from((bottom[j], levels[-1][2 * j + rings % 2]) for j in range(k))
    return graph


def _truncated(graph):
    """Replace every vertex by a face through its edge ends, in planar order."""
    _, embedding = nx.check_planarity(graph)
    truncated = nx.Graph()
    for v in graph:
        around = list(embedding.neighbors_cw_order(v))
        nx.add_cycle(truncated, [(v, w) for w in around])
        truncated.add_edges_from(((v, w), (w, v)) for w in around)
    return truncated


def _subdivided(graph, edges):
    """Copy of an integer-labelled graph with each listed edge split by a new 2-vertex."""
    graph = nx.Graph(graph)
    for u, v in edges:
        middle = graph.number_of_nodes()
        graph.remove_edge(u, v)
        nx.add_path(graph, [u, middle, v])
    return graph


NAMED = {
    "prism": lambda: nx.circular_ladder_graph(3),
    "k4": lambda: nx.complete_graph(4),
    "cube": nx.cubical_graph,
    "dodecahedron": nx.dodecahedral_graph,
    "c5": lambda: nx.cycle_graph(5),
    "c6": lambda: nx.cycle_graph(6),
    "c7": lambda: nx.cycle_graph(7),
    "theta": _theta,
    "claw": lambda: nx.star_graph(3),
    "diamond": nx.diamond_graph,
    "k23": lambda: nx.complete_bipartite_graph(2, 3),
    "cube_subdivided": lambda: _subdivided(_cube(), [(0, 4), (5, 7), (2, 3)]),
    "dodecahedron_subdivided": lambda: _subdivided(nx.dodecahedral_graph(), [(0, 1)]),
    "dodecahedron_subdivided_at_vertex": lambda: _subdivided(nx.dodecahedral_graph(), [(0, 1), (1, 2)]),
    "dodecahedron_subdivided_apart": lambda: _subdivided(nx.dodecahedral_graph(), [(0, 1), (2, 3)]),
    "barrel24_subdivided": lambda: _subdivided(_barrel(6, 1), [(0, 1), (3, 4)]),
    "barrel36_subdivided": lambda: _subdivided(_barrel(6, 2), [(7, 19)]),
    "truncated_icosahedron": lambda: _truncated(nx.icosahedral_graph()),
}

# first configuration found on each instance; together they reach every deleting kind
TARGETED = {
    "doubled_edge_path": Kind.PARALLEL_EDGE,
    "claw": Kind.DEGREE_LEQ_ONE,
    "diamond": Kind.TRIANGLE_WITH_2_VERTEX,
    "prism": Kind.TRIANGLE,
    "k23": Kind.FOUR_CYCLE_WITH_2_VERTEX,
    "cube": Kind.FOUR_CYCLE,
    "dodecahedron_subdivided_at_vertex": Kind.TWO_VERTICES_AT_DISTANCE_1_OR_2,
    "cube_subdivided": Kind.TWO_VERTEX_ON_5_FACE,
    "dodecahedron_subdivided_apart": Kind.TWO_VERTICES_AT_DISTANCE_3,
    "barrel24_subdivided": Kind.FACE_BOUNDARY_DISTANCE_4_PAIR,
    "dodecahedron_subdivided": Kind.TWO_VERTEX_ON_6_FACE,
    "barrel36_subdivided": Kind.TWO_VERTEX_ON_7_FACE,
    "dodecahedron": Kind.ADJACENT_FIVE_FIVE_FACES,
    "truncated_icosahedron": Kind.FIVE_SIX_ADJACENT_FACES,
}


def named_instance(name):
    if name == "doubled_edge_path":
        return embed_edge_list(4, [(0, 1), (1, 2), (1, 2), (2, 3)])
    if name not in NAMED:
        raise UnknownName(f"unknown instance {name!r}; known: {', '.join(instance_names())}")
    graph = nx.convert_node_labels_to_integers(NAMED[name](), ordering="sorted")
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    return embed_edge_list(graph.number_of_nodes(), edges)


def instance_names():
    return sorted(NAMED) + ["doubled_edge_path"]


class _Growth:
    """Mutable rotation system, frozen into a PlaneMultigraph at the end."""

    def __init__(self):
        self.edges = [[0, 1], [1, 2], [2, 0]]
        self.rotations = [[0, 2], [0, 1], [1, 2]]
        self.protected = set()  # edges of parallel pairs, never subdivided

    @property
    def vertex_count(self):
        return len(self.rotations)

    def other(self, e, v):
        a, b = self.edges[e]
        return b if v == a else a

    def faces(self):
        seen = set()
        faces = []
        for v, rot in enumerate(self.rotations):
            for e in rot:
                dart = (v, e)
                walk = []
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart)
                    tail, edge = dart
                    head = self.other(edge, tail)
                    at = self.rotations[head]
                    dart = (head, at[(at.index(edge) + 1) % len(at)])
                if walk:
                    faces.append(walk)
        return faces

    def subdivide(self, e):
        a, b = self.edges[e]
        m = self.vertex_count
        e2 = len(self.edges)
        self.edges[e] = [a, m]
        self.edges.append([m, b])
        rot = self.rotations[b]
        rot[rot.index(e)] = e2
        self.rotations.append([e, e2])
        return m

    def arriving(self, face, v):
        """Edge by which the face walk enters v."""
        for i, (tail, _) in enumerate(face):
            if tail == v:
                return face[i - 1][1]
        raise KeyError(v)

    def join(self, p, p_in, q, q_in):
        """Edge pq placed right after the given arriving edges, splitting their common face."""
        e = len(self.edges)
        self.edges.append([p, q])
        for v, after in ((p, p_in), (q, q_in)):
            rot = self.rotations[v]
            rot.insert(rot.index(after) + 1, e)
        return e

    def double(self, e):
        a, b = self.edges[e]
        copy = len(self.edges)
        self.edges.append([a, b])
        rot = self.rotations[a]
        rot.insert(rot.index(e), copy)
        rot = self.rotations[b]
        rot.insert(rot.index(e) + 1, copy)
        self.protected.update((e, copy))

    def adjacent(self, a, b):
        return any(self.other(e, a) == b for e in self.rotations[a])

    def freeze(self):
        return build_plane_multigraph(self.vertex_count, [tuple(e) for e in self.edges], self.rotations)


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _handle(growth, rng):
    faces = [f for f in growth.faces() if len({e for _, e in f} - growth.protected) >= 2]
    face = _pick(rng, faces)
    free = sorted({e for _, e in face} - growth.protected)
    i, j = rng.choice(len(free), size=2, replace=False)
    m1 = growth.subdivide(free[int(i)])
    m2 = growth.subdivide(free[int(j)])
    # the face survives subdivision with both new vertices on it
    face = next(f for f in growth.faces() if {m1, m2} <= {v for v, _ in f})
    growth.join(m1, growth.arriving(face, m1), m2, growth.arriving(face, m2))


def _chord(growth, rng):
    """Join two non-adjacent low-degree vertices of a face; False when no face allows it."""
    options = []
    for face in growth.faces():
        low = sorted({v for v, _ in face if len(growth.rotations[v]) <= 2})
        options += [(face, a, b) for i, a in enumerate(low) for b in low[i + 1:]
                    if not growth.adjacent(a, b)]
    if not options:
        return False
    face, a, b = _pick(rng, options)
    growth.join(a, growth.arriving(face, a), b, growth.arriving(face, b))
    return True


def _parallel(growth, rng):
    free = [e for e in range(len(growth.edges)) if e not in growth.protected]
    e = _pick(rng, free)
    growth.subdivide(e)
    middle = growth.subdivide(len(growth.edges) - 1)
    growth.double(growth.rotations[middle][0])


def generate(spec):
    """Grow a random loopless subcubic plane multigraph on about spec.target_vertices vertices."""
    n = spec.target_vertices
    p2 = Fraction(spec.two_vertex_fraction)
    if n < 3:
        raise InfeasibleSpec(f"need at least 3 vertices, got {n}")
    if not 0 <= p2 <= 1:
        raise InfeasibleSpec(f"two_vertex_fraction {p2} outside [0, 1]")
    rng = np.random.default_rng(spec.seed)
    growth = _Growth()
    if spec.allow_parallel and n >= 5:
        _parallel(growth, rng)

    while growth.vertex_count < n:
        remaining = n - growth.vertex_count
        roll = rng.random()
        if remaining == 1 or roll < p2:
            growth.subdivide(_pick(rng, [e for e in range(len(growth.edges)) if e not in growth.protected]))
        elif spec.allow_parallel and roll < p2 + (1 - p2) / 10:
            _parallel(growth, rng)
        elif roll < p2 + (1 - p2) / 4 and _chord(growth, rng):
            continue
        else:
            _handle(growth, rng)
    return growth.freeze()


def corpus(count, n, seed=0, named=True):
    """Named instances, then `count` random graphs with mixed settings.

    Yields:
        (name, PlaneMultigraph) pairs.
    """
    if named:
        for name in instance_names():
            yield name, named_instance(name)
    fractions = (Fraction(0), Fraction(1, 10), Fraction(1, 4), Fraction(1, 2))
    sizes = np.random.default_rng(seed).integers(max(3, n // 2), n + 1, size=count)
    for i in range(count):
        spec = GenSpec(int(sizes[i]), seed + i, fractions[i % len(fractions)], i % 3 == 0)
        yield f"random-{seed + i}-n{spec.target_vertices}", generate(spec)
