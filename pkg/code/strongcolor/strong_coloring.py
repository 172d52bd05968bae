"""Strong edge colorings: the sees relation, partial colorings and extension."""
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from .errors import (AlreadyColored, ColorOutOfRange, FrontierTooLarge, InputInvalid,
                     InvalidColoring, UncoloredEdge)


@dataclass(frozen=True)
class PartialColoring:
    palette_size: int
    colors: tuple  # indexed by edge id, None when uncolored

    def __post_init__(self):
        for e, c in enumerate(self.colors):
            if c is not None and not 1 <= c <= self.palette_size:
                raise ColorOutOfRange(f"edge {e} has color {c} outside [1, {self.palette_size}]")

    @classmethod
    def empty(cls, edge_count, palette_size=9):
        return cls(palette_size, (None,) * edge_count)

    def color(self, e):
        return self.colors[e]

    def with_colors(self, assignment):
        """Return a copy with edge colors from the mapping set (None uncolors)."""
        colors = list(self.colors)
        for e, c in assignment.items():
            colors[e] = c
        return PartialColoring(self.palette_size, tuple(colors))

    def is_total(self):
        return all(c is not None for c in self.colors)

    def uncolored(self):
        return [e for e, c in enumerate(self.colors) if c is None]


@dataclass(frozen=True)
class ConflictGraph:
    sees: tuple  # frozenset of edge ids per edge

    def __len__(self):
        return len(self.sees)


class Violation(NamedTuple):
    e: int
    f: int
    color: int


@dataclass
class SearchOutcome:
    coloring: object  # PartialColoring or None
    nodes: int = 0
    budget_exhausted: bool = False


def _zone(g, e):
    a, b = g.endpoints(e)
    zone = {a, b}
    zone.update(g.neighbors(a))
    zone.update(g.neighbors(b))
    return zone


def sees(g, e, f):
    """True iff e and f are adjacent or joined by a third edge."""
    if e == f:
        return False
    a, b = g.endpoints(f)
    zone = _zone(g, e)
    return a in zone or b in zone


def conflict_graph(g):
    """For each edge, the edges it sees: f sees ab iff f has an endpoint in N[a] or N[b]."""
    sees_sets = []
    for e in range(g.edge_count):
        found = set()
        for v in _zone(g, e):
            found.update(g.rotations[v])
        found.discard(e)
        sees_sets.append(frozenset(found))
    return ConflictGraph(tuple(sees_sets))


def line_graph_square(g):
    """Square of the line graph of a simple graph, with edge ids as nodes."""
    line = nx.Graph()
    line.add_nodes_from(range(g.edge_count))
    for v in range(g.vertex_count):
        rot = g.rotations[v]
        line.add_edges_from((rot[i], rot[j]) for i in range(len(rot)) for j in range(i + 1, len(rot)))
    return nx.power(line, 2)


def verify_strong(g, coloring):
    """List every pair of edges that see each other and share a color.

    Returns:
        Violations sorted by edge ids; an empty list means the coloring is strong.
    """
    for e, c in enumerate(coloring.colors):
        if c is None:
            raise UncoloredEdge(e)
    conflicts = conflict_graph(g)
    return [Violation(e, f, coloring.colors[e])
            for e in range(g.edge_count) for f in sorted(conflicts.sees[e])
            if e < f and coloring.colors[e] == coloring.colors[f]]


def is_good(g, partial, conflicts=None):
    conflicts = conflicts or conflict_graph(g)
    colors = partial.colors
    return not any(colors[e] is not None and colors[e] == colors[f]
                   for e in range(g.edge_count) for f in conflicts.sees[e] if e < f)


def available_colors(g, partial, e, conflicts=None):
    if partial.colors[e] is not None:
        raise AlreadyColored(e, partial.colors[e])
    seen = conflicts.sees[e] if conflicts else conflict_graph(g).sees[e]
    taken = {partial.colors[f] for f in seen}
    return {c for c in range(1, partial.palette_size + 1) if c not in taken}


def used_at(g, partial, v):
    return {partial.colors[e] for e in g.rotations[v] if partial.colors[e] is not None}


def used_other(g, partial, u, e):
    """Colors on the edges at u other than e."""
    return {partial.colors[f] for f in g.rotations[u] if f != e and partial.colors[f] is not None}


def sdr_extend(demands):
    """Pick pairwise distinct colors, one from each demand set, by bipartite matching.

    Args:
        demands: (edge id, color set) pairs with distinct edge ids.

    Returns:
        dict edge id -> color, or None when Hall's condition fails.
    """
    demands = [(e, sorted(colors)) for e, colors in demands]
    if not demands:
        return {}
    bipartite = nx.Graph()
    left = [("edge", e) for e, _ in demands]
    bipartite.add_nodes_from(left)
    for e, colors in demands:
        bipartite.add_edges_from((("edge", e), ("color", c)) for c in colors)
    matching = nx.bipartite.hopcroft_karp_matching(bipartite, top_nodes=left)
    result = {}
    for node in left:
        if node not in matching:
            return None
        result[node[1]] = matching[node][1]
    return result


class _BudgetExhausted(Exception):
    pass


def search_extension(g, partial, frontier, node_limit=None, max_frontier=20, conflicts=None):
    """Backtracking extension with forward checking and MRV edge order.

    Colors are tried lowest first; ties in MRV go to the lowest edge id.
    """
    frontier = sorted(set(frontier))
    if len(frontier) > max_frontier:
        raise FrontierTooLarge(f"frontier of {len(frontier)} edges exceeds {max_frontier}")
    for e in frontier:
        if partial.colors[e] is not None:
            raise AlreadyColored(e, partial.colors[e])
    conflicts = conflicts or conflict_graph(g)
    if not is_good(g, partial, conflicts):
        raise InvalidColoring("extension requires a good partial coloring")

    domains = {e: available_colors(g, partial, e, conflicts) for e in frontier}
    assignment = {}
    outcome = SearchOutcome(None)

    def solve():
        open_edges = [e for e in frontier if e not in assignment]
        if not open_edges:
            return True
        e = min(open_edges, key=lambda x: (len(domains[x]), x))
        neighbours = [f for f in conflicts.sees[e] if f in domains and f not in assignment]
        for c in sorted(domains[e]):
            outcome.nodes += 1
            if node_limit is not None and outcome.nodes > node_limit:
                raise _BudgetExhausted
            pruned = [f for f in neighbours if c in domains[f]]
            for f in pruned:
                domains[f].discard(c)
            if all(domains[f] for f in pruned):
                assignment[e] = c
                if solve():
                    return True
                del assignment[e]
            for f in pruned:
                domains[f].add(c)
        return False

    try:
        if solve():
            outcome.coloring = partial.with_colors(assignment)
    except _BudgetExhausted:
        outcome.budget_exhausted = True
    return outcome


def extend_by_search(g, partial, frontier, node_limit=None, max_frontier=20):
    return search_extension(g, partial, frontier, node_limit, max_frontier).coloring


def greedy_bound(delta):
    return 2 * (delta - 1) + 2 * (delta - 1) ** 2 + 1


def greedy_strong(g, order=None):
    """First-fit strong coloring along the given edge order."""
    order = list(range(g.edge_count)) if order is None else list(order)
    if sorted(order) != list(range(g.edge_count)):
        raise InputInvalid("greedy order must be a permutation of all edge ids")
    conflicts = conflict_graph(g)
    colors = [None] * g.edge_count
    for e in order:
        taken = {colors[f] for f in conflicts.sees[e]}
        c = 1
        while c in taken:
            c += 1
        colors[e] = c
    return PartialColoring(max(colors, default=1) or 1, tuple(colors))


def palette_used(coloring):
    return len({c for c in coloring.colors if c is not None})


def induced_matching_lower(g, coloring, palette=9):
    """Largest color class of a strong coloring, an induced matching of size >= ceil(|E|/9)."""
    if verify_strong(g, coloring):
        raise InvalidColoring("coloring is not strong")
    if any(c > palette for c in coloring.colors):
        raise InvalidColoring(f"coloring uses colors beyond {palette}")
    if g.edge_count == 0:
        return frozenset()
    classes = {}
    for e, c in enumerate(coloring.colors):
        classes.setdefault(c, []).append(e)
    best = max(sorted(classes), key=lambda c: len(classes[c]))
    matching = frozenset(classes[best])
    if any(sees(g, e, f) for e in matching for f in matching if e < f):
        raise InvalidColoring(f"color class {best} is not an induced matching")
    return matching
