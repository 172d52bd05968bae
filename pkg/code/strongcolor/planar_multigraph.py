"""Loopless plane multigraphs given by a rotation system.

A dart is the pair (vertex, edge id): the edge traversed leaving that vertex.
Face tracing convention, used everywhere in the package: leaving v along e
and arriving at w, the walk continues with the successor of e in the
rotation at w.
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import IndexOutOfRange, LoopEdge, NonPlanar, NotOnFace, RotationMismatch


@dataclass(frozen=True)
class PlaneMultigraph:
    vertex_count: int
    edges: tuple
    rotations: tuple

    @property
    def edge_count(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.rotations[v])

    @cached_property
    def max_degree(self):
        return max((len(r) for r in self.rotations), default=0)

    def endpoints(self, e):
        return self.edges[e]

    def other(self, e, v):
        a, b = self.edges[e]
        return b if v == a else a

    def neighbors(self, v):
        """Neighbors in rotation order, repeated once per parallel edge."""
        return [self.other(e, v) for e in self.rotations[v]]

    @cached_property
    def _positions(self):
        return tuple({e: i for i, e in enumerate(rot)} for rot in self.rotations)

    def successor(self, v, e):
        rot = self.rotations[v]
        return rot[(self._positions[v][e] + 1) % len(rot)]

    def edges_between(self, a, b):
        return [e for e in self.rotations[a] if self.other(e, a) == b]

    def edge_between(self, a, b):
        found = self.edges_between(a, b)
        return found[0] if found else None

    def is_simple(self):
        seen = set()
        for a, b in self.edges:
            key = (a, b) if a < b else (b, a)
            if key in seen:
                return False
            seen.add(key)
        return True


@dataclass(frozen=True)
class Face:
    darts: tuple

    @property
    def length(self):
        return len(self.darts)

    @property
    def vertices(self):
        return tuple(v for v, _ in self.darts)

    @property
    def edge_ids(self):
        return tuple(e for _, e in self.darts)


@dataclass(frozen=True)
class StructureReport:
    bridges: frozenset
    components: tuple
    two_vertices: frozenset
    short_cycles: tuple
    girth: object  # int, or None when acyclic


def build_plane_multigraph(vertex_count, edge_endpoints, rotations):
    """Validate and freeze a plane multigraph.

    Args:
        vertex_count: number of vertices, ids 0..vertex_count-1.
        edge_endpoints: (a, b) pairs indexed by edge id.
        rotations: one sequence of incident edge ids per vertex.

    Returns:
        The validated PlaneMultigraph.
    """
    if vertex_count < 0:
        raise IndexOutOfRange("vertex count", vertex_count, 0)
    edges = []
    for e, (a, b) in enumerate(edge_endpoints):
        for end in (a, b):
            if not 0 <= end < vertex_count:
                raise IndexOutOfRange(f"endpoint of edge {e}: vertex", end, vertex_count)
        if a == b:
            raise LoopEdge(e, a)
        edges.append((int(a), int(b)))
    if len(rotations) != vertex_count:
        raise RotationMismatch(len(rotations), f"expected {vertex_count} rotations, got {len(rotations)}")

    incidences = [[] for _ in range(vertex_count)]
    for e, (a, b) in enumerate(edges):
        incidences[a].append(e)
        incidences[b].append(e)
    frozen = []
    for v, rot in enumerate(rotations):
        rot = tuple(int(e) for e in rot)
        for e in rot:
            if not 0 <= e < len(edges):
                raise IndexOutOfRange(f"edge in rotation at vertex {v}: edge", e, len(edges))
        if sorted(rot) != sorted(incidences[v]):
            raise RotationMismatch(v, f"lists {list(rot)} but incident edges are {sorted(incidences[v])}")
        frozen.append(rot)

    g = PlaneMultigraph(vertex_count, tuple(edges), tuple(frozen))
    _check_euler(g)
    return g


def _check_euler(g):
    parts = components(g)
    part_of = {v: i for i, part in enumerate(parts) for v in part}
    face_totals = Counter(part_of[face.darts[0][0]] for face in trace_faces(g))
    for i, component in enumerate(parts):
        edge_total = sum(g.degree(v) for v in component) // 2
        if edge_total == 0:
            continue
        face_total = face_totals[i]
        if len(component) - edge_total + face_total != 2:
            raise RotationMismatch(
                min(component),
                f"rotation system is not planar: component has {len(component)} vertices, "
                f"{edge_total} edges and {face_total} faces")


def trace_faces(g):
    """Trace every face walk; each dart lies on exactly one face."""
    faces = []
    seen = set()
    for v in range(g.vertex_count):
        for e in g.rotations[v]:
            if (v, e) in seen:
                continue
            darts = []
            dart = (v, e)
            while dart not in seen:
                seen.add(dart)
                darts.append(dart)
                tail, edge = dart
                head = g.other(edge, tail)
                dart = (head, g.successor(head, edge))
            faces.append(Face(tuple(darts)))
    return faces


def face_of_darts(faces):
    """Map each dart to the index of the face containing it."""
    return {dart: i for i, face in enumerate(faces) for dart in face.darts}


def to_multigraph(g):
    """networkx MultiGraph on the same vertices, keyed by edge id."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.vertex_count))
    graph.add_edges_from((a, b, e) for e, (a, b) in enumerate(g.edges))
    return graph


def components(g):
    """Vertex sets of the connected components, ordered by smallest vertex."""
    parts = (tuple(sorted(part)) for part in nx.connected_components(to_multigraph(g)))
    return sorted(parts)


def side_of(g, start, cut):
    """Vertices still reachable from start once the edges in cut are removed."""
    graph = to_multigraph(g)
    graph.remove_edges_from((*g.edges[e], e) for e in cut)
    return nx.node_connected_component(graph, start)


def cycle_space_labels(g):
    """Label every edge with a bitset over the fundamental cycles of a spanning forest.

    Bridges get label 0. In a connected graph two edges form a 2-edge cut
    exactly when their labels are equal and nonzero.
    """
    graph = to_multigraph(g)
    forest = nx.Graph()
    forest.add_nodes_from(graph)
    forest.add_edges_from((a, b, {"edge": e})
                          for a, b, e in nx.minimum_spanning_edges(graph, keys=True, data=False))
    tree = {e for _, _, e in forest.edges(data="edge")}

    labels = [0] * g.edge_count
    acc = [0] * g.vertex_count
    bit = 1
    for e, (a, b) in enumerate(g.edges):
        if e in tree:
            continue
        labels[e] = bit
        acc[a] ^= bit
        acc[b] ^= bit
        bit <<= 1
    # children before parents
    for parent, child in reversed(list(nx.dfs_edges(forest))):
        labels[forest[parent][child]["edge"]] = acc[child]
        acc[parent] ^= acc[child]
    return labels


def bridges(g):
    return frozenset(e for e, label in enumerate(cycle_space_labels(g)) if label == 0)


def to_networkx(g):
    """Underlying simple graph (parallel edges collapsed)."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.vertex_count))
    graph.add_edges_from(g.edges)
    return graph


def _canonical_cycle(cycle):
    i = cycle.index(min(cycle))
    rotated = cycle[i:] + cycle[:i]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def structure_report(g):
    simple = to_networkx(g)
    cycles = sorted(
        {_canonical_cycle(list(c)) for c in nx.simple_cycles(simple, length_bound=7) if len(c) >= 3},
        key=lambda c: (len(c), c))
    if not g.is_simple():
        girth = 2
    elif cycles:
        girth = len(cycles[0])
    else:
        girth = nx.girth(simple)
        girth = None if girth == float("inf") else int(girth)
    return StructureReport(
        bridges=bridges(g),
        components=tuple(components(g)),
        two_vertices=frozenset(v for v in range(g.vertex_count) if g.degree(v) == 2),
        short_cycles=tuple(cycles),
        girth=girth,
    )


def boundary_distance(face, u, v):
    walk = face.vertices
    at_u = [i for i, w in enumerate(walk) if w == u]
    at_v = [i for i, w in enumerate(walk) if w == v]
    if not at_u or not at_v:
        missing = u if not at_u else v
        raise NotOnFace(f"vertex {missing} does not occur on the face walk {list(walk)}")
    n = len(walk)
    return min(min(abs(i - j), n - abs(i - j)) for i in at_u for j in at_v)


def embed_edge_list(vertex_count, edge_endpoints):
    """Compute a planar rotation system for a loopless edge list.

    The simple underlying graph is embedded with networkx; every extra
    parallel copy is inserted next to its twin so the pair bounds a 2-face.
    """
    edge_endpoints = [tuple(pair) for pair in edge_endpoints]
    for e, (a, b) in enumerate(edge_endpoints):
        for end in (a, b):
            if not 0 <= end < vertex_count:
                raise IndexOutOfRange(f"endpoint of edge {e}: vertex", end, vertex_count)
        if a == b:
            raise LoopEdge(e, a)

    bundles = {}
    for e, (a, b) in enumerate(edge_endpoints):
        bundles.setdefault((min(a, b), max(a, b)), []).append(e)

    simple = nx.Graph()
    simple.add_nodes_from(range(vertex_count))
    simple.add_edges_from(bundles)
    planar, embedding = nx.check_planarity(simple)
    if not planar:
        raise NonPlanar(f"edge list on {vertex_count} vertices has no planar embedding")

    rotations = []
    for v in range(vertex_count):
        rot = []
        for w in embedding.neighbors_cw_order(v) if simple.degree(v) else []:
            bundle = bundles[(min(v, w), max(v, w))]
            # copies precede the first edge at the smaller end and follow it at the larger
            rot.extend(reversed(bundle) if v < w else bundle)
        rotations.append(rot)
    return build_plane_multigraph(vertex_count, edge_endpoints, rotations)


def degree_histogram(g):
    return Counter(g.degree(v) for v in range(g.vertex_count))


@dataclass(frozen=True)
class NewEdge:
    """Edge added by graph surgery.

    Each end is either ("old", vertex, vacated edge id), taking the rotation
    slot the vacated edge held at that vertex, or ("new", index) for the
    index-th added vertex.
    """
    label: str
    ends: tuple
    origin: object = None  # original edge id this edge stands for, if any


@dataclass(frozen=True)
class Spliced:
    graph: PlaneMultigraph
    edge_origin: tuple   # new edge id -> old edge id or None
    vertex_origin: tuple  # new vertex id -> old vertex id or None
    added: dict          # NewEdge label -> new edge id


def splice(g, remove_vertices=(), remove_edges=(), new_vertex_count=0, new_edges=(), new_rotations=()):
    """Delete vertices and edges, then add edges in vacated rotation slots.

    Surviving vertices and edges keep their relative order; added vertices
    and edges are numbered after them. new_rotations lists, per added
    vertex, the labels of its edges in cyclic order.
    """
    removed = set(remove_vertices)
    kept_vertices = [v for v in range(g.vertex_count) if v not in removed]
    vmap = {v: i for i, v in enumerate(kept_vertices)}
    base = len(kept_vertices)
    dropped = set(remove_edges)
    for v in removed:
        dropped.update(g.rotations[v])
    kept_edges = [e for e in range(g.edge_count) if e not in dropped]
    emap = {e: i for i, e in enumerate(kept_edges)}

    edges = [tuple(vmap[end] for end in g.edges[e]) for e in kept_edges]
    edge_origin = list(kept_edges)
    slots = {}
    added = {}
    for new in new_edges:
        ends = []
        for end in new.ends:
            if end[0] == "old":
                _, v, vacated = end
                if v in removed or vacated not in dropped:
                    raise RotationMismatch(v, f"slot of edge {vacated} is not vacated")
                slots[(v, vacated)] = len(edges)
                ends.append(vmap[v])
            else:
                ends.append(base + end[1])
        added[new.label] = len(edges)
        edges.append(tuple(ends))
        edge_origin.append(new.origin)

    rotations = []
    for v in kept_vertices:
        rot = []
        for e in g.rotations[v]:
            if e in emap:
                rot.append(emap[e])
            elif (v, e) in slots:
                rot.append(slots[(v, e)])
        rotations.append(rot)
    for labels in new_rotations:
        rotations.append([added[label] for label in labels])
    graph = build_plane_multigraph(base + new_vertex_count, edges, rotations)
    vertex_origin = tuple(kept_vertices) + (None,) * new_vertex_count
    return Spliced(graph, tuple(edge_origin), vertex_origin, added)
