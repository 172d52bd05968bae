"""Exact strong chromatic index by branch and bound over the conflict graph."""
import sys
from dataclasses import dataclass

from .errors import TooLarge
from .strong_coloring import PartialColoring, conflict_graph, greedy_strong, palette_used


@dataclass(frozen=True)
class ExactResult:
    chi_s: object  # int, or None when it exceeds kmax
    witness: object  # PartialColoring or None
    kmax: int

    @property
    def exceeds(self):
        return self.chi_s is None


def greedy_clique(conflicts):
    """Grow a clique of the conflict graph from every start edge, keep the largest."""
    best = []
    for start in range(len(conflicts.sees)):
        clique = [start]
        candidates = set(conflicts.sees[start])
        while candidates:
            # most connected candidate first, lowest id on ties
            pick = max(sorted(candidates), key=lambda f: len(conflicts.sees[f] & candidates))
            clique.append(pick)
            candidates &= conflicts.sees[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _guard(g, max_edges, force):
    if g.edge_count > max_edges and not force:
        raise TooLarge(f"{g.edge_count} edges exceed the exact solver guard of {max_edges}")


def exact_coloring(g, k, max_edges=60, force=False, conflicts=None):
    """Strong k-edge-coloring of g, or None when none exists.

    DSATUR branching with the first-use color order canonicalized; a greedy
    clique is precolored 1..q.
    """
    _guard(g, max_edges, force)
    if g.edge_count == 0:
        return PartialColoring.empty(0, k)
    conflicts = conflicts or conflict_graph(g)
    clique = greedy_clique(conflicts)
    if len(clique) > k:
        return None

    colors = [None] * g.edge_count
    for i, e in enumerate(clique):
        colors[e] = i + 1
    remaining = [e for e in range(g.edge_count) if colors[e] is None]
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.edge_count + 100))

    def saturation(e):
        return {colors[f] for f in conflicts.sees[e] if colors[f] is not None}

    def solve(max_used, left):
        if left == 0:
            return True
        best, best_key, best_taken = None, None, None
        for e in remaining:
            if colors[e] is not None:
                continue
            taken = saturation(e)
            key = (len(taken), len(conflicts.sees[e]), -e)
            if best_key is None or key > best_key:
                best, best_key, best_taken = e, key, taken
        for c in range(1, min(k, max_used + 1) + 1):
            if c in best_taken:
                continue
            colors[best] = c
            if solve(max(max_used, c), left - 1):
                return True
            colors[best] = None
        return False

    if not solve(len(clique), len(remaining)):
        return None
    return PartialColoring(k, tuple(colors))


def strong_chromatic_index(g, kmax=9, max_edges=60, force=False):
    """Smallest k admitting a strong k-edge-coloring, searched upward from a clique bound."""
    _guard(g, max_edges, force)
    if g.edge_count == 0:
        return ExactResult(0, PartialColoring.empty(0, 1), kmax)
    conflicts = conflict_graph(g)
    lower = len(greedy_clique(conflicts))
    upper = greedy_strong(g)
    for k in range(lower, kmax + 1):
        if k >= palette_used(upper):
            # every smaller k was refuted, so the greedy coloring is optimal
            return ExactResult(k, PartialColoring(k, upper.colors), kmax)
        witness = exact_coloring(g, k, max_edges, force, conflicts)
        if witness is not None:
            return ExactResult(k, witness, kmax)
    return ExactResult(None, None, kmax)
