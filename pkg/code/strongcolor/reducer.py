"""Reduce, recurse, lift: the constructive strong 9-edge-coloring.

color_graph repeatedly finds a configuration, replaces the graph by a
smaller one (deleting the configuration and possibly adding auxiliary
edges or vertices), colors the small graph and extends the coloring back.
Cut configurations split the graph instead; the part colorings are merged
under a palette permutation.
"""
import itertools
import sys
from dataclasses import dataclass, field

from .config import load_settings
from .configurations import Kind, find_configuration
from .errors import (ExtensionImpossible, InputInvalid, InternalCounterexample,
                     InvalidConfiguration, RotationMismatch)
from .exact_solver import exact_coloring
from .io_formats import serialize_graph
from .planar_multigraph import NewEdge, side_of, splice
from .strong_coloring import (PartialColoring, conflict_graph, is_good, sdr_extend,
                              search_extension, verify_strong)


@dataclass(frozen=True)
class SplitPart:
    graph: object
    edge_origin: tuple  # part edge id -> original edge id


@dataclass(frozen=True)
class ReductionStep:
    config: object
    removed_vertices: tuple
    removed_edges: tuple
    added_vertices: int = 0
    added_edges: tuple = ()
    seeding_plan: dict = field(default_factory=dict)  # removed edge -> label of the edge whose color it copies
    frontier: tuple = ()
    reduced: object = None
    edge_origin: tuple = ()
    aux_edges: dict = field(default_factory=dict)  # label -> edge id in the reduced graph
    split: tuple = None
    shared_edges: tuple = ()


@dataclass
class TraceEntry:
    kind: Kind
    witness: str
    frontier_size: int
    nodes: int = 0
    widened: bool = False
    budget_exhausted: bool = False

    def line(self):
        return (f"{self.kind} [{self.witness}] frontier={self.frontier_size} "
                f"nodes={self.nodes} widened={int(self.widened)}")


@dataclass
class ReductionTrace:
    entries: list = field(default_factory=list)
    base_cases: int = 0

    @property
    def extension_widened(self):
        return sum(entry.widened for entry in self.entries)

    @property
    def first_pass_budget_exhausted(self):
        return sum(entry.budget_exhausted for entry in self.entries)

    def kinds(self):
        return [entry.kind for entry in self.entries]

    def lines(self):
        return [f"{i} {entry.line()}" for i, entry in enumerate(self.entries)]


## --
## -- building reductions
## --

def _edge(g, a, b):
    e = g.edge_between(a, b)
    if e is None:
        raise InvalidConfiguration(f"expected an edge between {a} and {b}", serialize_graph(g))
    return e


def _chord(g, label, y_a, x_a, y_b, x_b):
    """Edge y_a y_b taking the slots of the pendant edges x_a y_a and x_b y_b."""
    return NewEdge(label, (("old", y_a, _edge(g, x_a, y_a)), ("old", y_b, _edge(g, x_b, y_b))))


def _star(g, label, index, y, x):
    return NewEdge(label, (("new", index), ("old", y, _edge(g, x, y))))


def _plan(g, cfg):
    """Removal, additions, candidate rotations of added vertices and seeds for a deleting kind."""
    w = cfg.witness
    kind = cfg.kind
    remove_vertices, remove_edges, added, rotations, seeds = [], [], [], [()], {}

    if kind is Kind.PARALLEL_EDGE:
        remove_edges = [w["e"]]
    elif kind is Kind.DEGREE_LEQ_ONE:
        remove_vertices = [w["v"]]
    elif kind is Kind.TRIANGLE_WITH_2_VERTEX:
        remove_vertices = [w["w0"]]
    elif kind is Kind.TRIANGLE:
        remove_vertices = [w["w0"], w["w1"], w["w2"]]
    elif kind is Kind.FOUR_CYCLE_WITH_2_VERTEX:
        remove_vertices = [w["w1"]]
    elif kind is Kind.FOUR_CYCLE:
        remove_vertices = [w[f"x{i}"] for i in range(4)]
        added = [_chord(g, "y0y2", w["y0"], w["x0"], w["y2"], w["x2"])]
        seeds = {_edge(g, w["x0"], w["y0"]): "y0y2", _edge(g, w["x2"], w["y2"]): "y0y2"}
    elif kind is Kind.TWO_VERTICES_AT_DISTANCE_1_OR_2:
        remove_vertices = [w["v"]] if w["shape"] == "adjacent" else [w["u"], w["v"], w["x"]]
    elif kind is Kind.TWO_VERTEX_ON_5_FACE:
        remove_vertices = [w[f"x{i}"] for i in range(1, 6)]
        added = [_chord(g, "y2y4", w["y2"], w["x2"], w["y4"], w["x4"])]
        seeds = {_edge(g, w["x4"], w["x5"]): "y2y4", _edge(g, w["x2"], w["y2"]): "y2y4"}
    elif kind is Kind.TWO_VERTICES_AT_DISTANCE_3:
        remove_vertices = [w[f"x{i}"] for i in range(2, 6)]
    elif kind is Kind.FACE_BOUNDARY_DISTANCE_4_PAIR:
        remove_vertices = [w[f"x{i}"] for i in range(2, 7)]
        added = [_chord(g, "y3y5", w["y3"], w["x3"], w["y5"], w["x5"])]
        seeds = {_edge(g, w["x3"], w["y3"]): "y3y5", _edge(g, w["x5"], w["y5"]): "y3y5"}
    elif kind is Kind.TWO_VERTEX_ON_6_FACE:
        remove_vertices = [w[f"x{i}"] for i in range(6)]
        added = [_star(g, f"zy{j}", 0, w[f"y{j}"], w[f"x{j}"]) for j in (1, 3, 4)]
        rotations = [(("zy4", "zy3", "zy1"),), (("zy1", "zy3", "zy4"),)]
        seeds = {_edge(g, w["x1"], w["y1"]): "zy1", _edge(g, w["x3"], w["x4"]): "zy1"}
    elif kind is Kind.TWO_VERTEX_ON_7_FACE:
        remove_vertices = [w[f"x{i}"] for i in range(7)]
        added = [_chord(g, "y1y6", w["y1"], w["x1"], w["y6"], w["x6"]),
                 _chord(g, "y2y4", w["y2"], w["x2"], w["y4"], w["x4"])]
        seeds = {_edge(g, w["x1"], w["y1"]): "y1y6", _edge(g, w["x6"], w["y6"]): "y1y6",
                 _edge(g, w["x2"], w["y2"]): "y2y4", _edge(g, w["x4"], w["y4"]): "y2y4"}
    elif kind is Kind.ADJACENT_FIVE_FIVE_FACES:
        remove_vertices = [w[f"x{i}"] for i in range(8)]
        added = [_star(g, f"uy{j}", 0, w[f"y{j}"], w[f"x{j}"]) for j in (1, 2, 3)]
        added += [_star(g, f"vy{j}", 1, w[f"y{j}"], w[f"x{j}"]) for j in (5, 6, 7)]
        u_orders = (("uy3", "uy2", "uy1"), ("uy1", "uy2", "uy3"))
        v_orders = (("vy7", "vy6", "vy5"), ("vy5", "vy6", "vy7"))
        rotations = list(itertools.product(u_orders, v_orders))
        seeds = {_edge(g, w[f"x{j}"], w[f"y{j}"]): f"uy{j}" for j in (1, 2, 3)}
        seeds.update({_edge(g, w[f"x{j}"], w[f"y{j}"]): f"vy{j}" for j in (5, 6, 7)})
    elif kind is Kind.FIVE_SIX_ADJACENT_FACES:
        remove_vertices = [w[f"u{i}"] for i in range(9)]
        added = [_chord(g, "v2v3", w["v2"], w["u2"], w["v3"], w["u3"]),
                 _chord(g, "v4v6", w["v4"], w["u4"], w["v6"], w["u6"]),
                 _chord(g, "v8v1", w["v8"], w["u8"], w["v1"], w["u1"])]
        seeds = {_edge(g, w["u1"], w["v1"]): "v8v1", _edge(g, w["u8"], w["v8"]): "v8v1",
                 _edge(g, w["u4"], w["v4"]): "v4v6", _edge(g, w["u6"], w["v6"]): "v4v6"}
    else:
        raise InvalidConfiguration(f"{kind} is not a deleting configuration", serialize_graph(g))
    return remove_vertices, remove_edges, added, rotations, seeds


def _splice_checked(g, cfg, candidates, **surgery):
    """Try each rotation choice for the added vertices; keep the first planar one."""
    for new_rotations in candidates:
        try:
            result = splice(g, new_rotations=new_rotations, **surgery)
        except RotationMismatch:
            continue
        if result.graph.max_degree > 3:
            raise InvalidConfiguration(f"{cfg.kind} produced a vertex of degree > 3", serialize_graph(g))
        return result
    raise InvalidConfiguration(f"{cfg.kind} [{cfg.describe()}] has no planar reduced graph",
                               serialize_graph(g))


def _split_parts(g, cfg):
    w = cfg.witness
    everything = set(range(g.vertex_count))
    if cfg.kind is Kind.DISCONNECTED:
        pieces = [splice(g, remove_vertices=everything - set(part)) for part in w["components"]]
        return tuple(SplitPart(p.graph, p.edge_origin) for p in pieces), ()
    if cfg.kind is Kind.CUT_EDGE:
        e, v1, v2 = w["e"], w["v1"], w["v2"]
        first = side_of(g, v1, (e,))
        second = everything - first
        pieces = [splice(g, remove_vertices=second - {v2}), splice(g, remove_vertices=first - {v1})]
        return tuple(SplitPart(p.graph, p.edge_origin) for p in pieces), (e,)
    e1, e2 = w["e1"], w["e2"]
    side_u = set(w["side_u"])
    side_w = everything - side_u
    pieces = []
    for keep, drop, a, b in ((side_u, side_w, w["u1"], w["u2"]), (side_w, side_u, w["w1"], w["w2"])):
        joins = [NewEdge("s1", (("new", 0), ("old", a, e1)), origin=e1),
                 NewEdge("s2", (("new", 0), ("old", b, e2)), origin=e2)]
        pieces.append(splice(g, remove_vertices=drop, new_vertex_count=1,
                             new_edges=joins, new_rotations=[("s1", "s2")]))
    return tuple(SplitPart(p.graph, p.edge_origin) for p in pieces), (e1, e2)


SPLITTING = (Kind.DISCONNECTED, Kind.CUT_EDGE, Kind.NON_ADJACENT_TWO_EDGE_CUT)
DELETING = tuple(kind for kind in Kind if kind not in SPLITTING)


def apply_reduction(g, cfg):
    """Build the reduction step for a configuration found on g."""
    if cfg.kind in SPLITTING:
        parts, shared = _split_parts(g, cfg)
        total = g.vertex_count + g.edge_count
        if any(p.graph.vertex_count + p.graph.edge_count >= total for p in parts):
            raise InvalidConfiguration(f"{cfg.kind} split does not shrink the graph", serialize_graph(g))
        return ReductionStep(config=cfg, removed_vertices=(), removed_edges=(),
                             split=parts, shared_edges=shared)

    remove_vertices, remove_edges, added, candidates, seeds = _plan(g, cfg)
    result = _splice_checked(g, cfg, candidates, remove_vertices=remove_vertices,
                             remove_edges=remove_edges, new_vertex_count=len(candidates[0]), new_edges=added)
    kept = set(e for e in result.edge_origin if e is not None)
    removed_edges = tuple(e for e in range(g.edge_count) if e not in kept)
    reduced = result.graph
    if reduced.vertex_count + reduced.edge_count >= g.vertex_count + g.edge_count:
        raise InvalidConfiguration(f"{cfg.kind} does not shrink the graph", serialize_graph(g))
    return ReductionStep(
        config=cfg,
        removed_vertices=tuple(sorted(remove_vertices)),
        removed_edges=removed_edges,
        added_vertices=reduced.vertex_count - (g.vertex_count - len(remove_vertices)),
        added_edges=tuple(added),
        seeding_plan=seeds,
        frontier=removed_edges,
        reduced=reduced,
        edge_origin=result.edge_origin,
        aux_edges=result.added,
    )


## --
## -- lifting colorings back
## --

def lift_and_extend(g, step, sub_coloring, settings=None, entry=None):
    """Extend a coloring of the reduced graph (or of the split parts) to g.

    Args:
        g: the graph the step was built from.
        step: the ReductionStep.
        sub_coloring: good coloring of step.reduced, or a sequence of
            colorings, one per split part.
        settings: palette and search budgets; environment defaults if None.
        entry: TraceEntry updated with search statistics.

    Returns:
        A good total coloring of g.
    """
    settings = settings or load_settings()
    if step.split is not None:
        return _merge_parts(g, step, sub_coloring, settings.palette)

    colors = [None] * g.edge_count
    for r, origin in enumerate(step.edge_origin):
        if origin is not None:
            colors[origin] = sub_coloring.colors[r]
    base = PartialColoring(settings.palette, tuple(colors))
    seeded = base.with_colors({e: sub_coloring.colors[step.aux_edges[label]]
                               for e, label in step.seeding_plan.items()})
    conflicts = conflict_graph(g)
    entry = entry or TraceEntry(step.config.kind, step.config.describe(), len(step.frontier))

    result = None
    if is_good(g, seeded, conflicts):
        open_edges = [e for e in step.frontier if e not in step.seeding_plan]
        outcome = search_extension(g, seeded, open_edges, settings.first_pass_nodes,
                                   settings.max_frontier, conflicts)
        entry.nodes += outcome.nodes
        entry.budget_exhausted = outcome.budget_exhausted
        result = outcome.coloring
    if result is None:
        entry.widened = True
        if settings.verbose:
            print(f"Warning: seeded extension failed for {step.config.kind}; "
                  f"searching all {len(step.frontier)} removed edges", file=sys.stderr)
        outcome = search_extension(g, base, step.frontier, None, settings.max_frontier, conflicts)
        entry.nodes += outcome.nodes
        result = outcome.coloring
    if result is None:
        raise ExtensionImpossible(
            f"no extension over the frontier of {step.config.kind} [{step.config.describe()}]",
            serialize_graph(g))
    return result


def _merge_parts(g, step, part_colorings, palette):
    conflicts = conflict_graph(g)
    colors = [None] * g.edge_count
    first = step.split[0]
    for r, origin in enumerate(first.edge_origin):
        colors[origin] = part_colorings[0].colors[r]
    for part, coloring in zip(step.split[1:], part_colorings[1:]):
        colors = _merge_one(g, colors, part, coloring, palette, conflicts)
    merged = PartialColoring(palette, tuple(colors))
    if not merged.is_total() or verify_strong(g, merged):
        raise ExtensionImpossible(f"merged {step.config.kind} coloring is not strong", serialize_graph(g))
    return merged


def _merge_one(g, colors, part, coloring, palette, conflicts):
    """Recolor one part by a palette permutation so it agrees with the colored edges of g."""
    incoming = {origin: coloring.colors[r] for r, origin in enumerate(part.edge_origin)}
    fixed = {}
    forbidden = {c: set() for c in incoming.values()}
    for e, c in incoming.items():
        if colors[e] is None:
            forbidden[c].update(colors[f] for f in conflicts.sees[e] if colors[f] is not None)
        elif fixed.setdefault(c, colors[e]) != colors[e]:
            raise ExtensionImpossible("split parts disagree on a shared edge", serialize_graph(g))

    def apply(mapping):
        merged = list(colors)
        for e, c in incoming.items():
            merged[e] = mapping[c]
        return merged

    def good(merged):
        return is_good(g, PartialColoring(palette, tuple(merged)), conflicts)

    used = sorted(forbidden)
    palette_colors = range(1, palette + 1)
    if not fixed and not any(forbidden.values()):
        return apply({c: c for c in used})
    demands = [(c, {fixed[c]} if c in fixed else set(palette_colors) - forbidden[c]) for c in used]
    mapping = sdr_extend(demands)
    if mapping is not None:
        merged = apply(mapping)
        if good(merged):
            return merged

    # the matching ignores conflicts among incoming edges; free colors fill in palette order
    constrained = [c for c in used if c in fixed or forbidden[c]]
    free = [c for c in used if c not in fixed and not forbidden[c]]
    for image in itertools.permutations(palette_colors, len(constrained)):
        mapping = dict(zip(constrained, image))
        if any(mapping[c] != target for c, target in fixed.items()):
            continue
        if any(mapping[c] in forbidden[c] for c in constrained):
            continue
        mapping.update(zip(free, (c for c in palette_colors if c not in image)))
        merged = apply(mapping)
        if good(merged):
            return merged
    raise ExtensionImpossible("no palette permutation merges the split colorings", serialize_graph(g))


## --
## -- driver
## --

def _base_case(g, settings, trace):
    trace.base_cases += 1
    coloring = exact_coloring(g, settings.palette, force=True)
    if coloring is None:
        raise InternalCounterexample(
            f"no strong {settings.palette}-edge-coloring of a {g.vertex_count}-vertex base case",
            serialize_graph(g))
    return coloring


@dataclass
class _Frame:
    """Work-stack entry: a graph, its deletion chain and its colored split parts."""
    graph: object
    chain: list = field(default_factory=list)
    split: tuple = None
    parts: list = field(default_factory=list)


def _reduce(frame, settings, trace):
    """Apply deletions until a base case (returned) or a split (left on the frame)."""
    current = frame.graph
    while True:
        if current.edge_count == 0:
            return PartialColoring.empty(0, settings.palette)
        if current.vertex_count <= settings.base_case:
            return _base_case(current, settings, trace)
        cfg = find_configuration(current)
        if cfg is None:
            raise InternalCounterexample("no reducible configuration in a nonempty graph",
                                         serialize_graph(current))
        step = apply_reduction(current, cfg)
        entry = TraceEntry(cfg.kind, cfg.describe(),
                           len(step.frontier) if step.split is None else len(step.shared_edges))
        trace.entries.append(entry)
        if settings.verbose:
            print(f"reduce: {entry.line()}", file=sys.stderr)
        if step.split is not None:
            frame.split = (current, step, entry)
            return None
        frame.chain.append((current, step, entry))
        current = step.reduced


def _unwind(frame, coloring, settings):
    for graph, step, entry in reversed(frame.chain):
        coloring = lift_and_extend(graph, step, coloring, settings, entry)
    return coloring


def _color(g, settings, trace):
    # split parts are colored from an explicit stack, never by recursion
    stack = [_Frame(g)]
    done = None
    while True:
        frame = stack[-1]
        if done is not None:
            frame.parts.append(done)
            done = None
        elif frame.split is None:
            coloring = _reduce(frame, settings, trace)
            if coloring is not None:
                done = _unwind(frame, coloring, settings)
                stack.pop()
                if not stack:
                    return done
                continue
        graph, step, entry = frame.split
        if len(frame.parts) < len(step.split):
            stack.append(_Frame(step.split[len(frame.parts)].graph))
            continue
        coloring = lift_and_extend(graph, step, frame.parts, settings, entry)
        done = _unwind(frame, coloring, settings)
        stack.pop()
        if not stack:
            return done


def color_graph(g, settings=None):
    """Strong edge coloring of a loopless subcubic plane multigraph with the configured palette.

    Returns:
        (coloring, trace) where trace records every reduction applied.
    """
    settings = settings or load_settings()
    if g.max_degree > 3:
        raise InputInvalid(f"maximum degree {g.max_degree} exceeds 3")
    trace = ReductionTrace()
    coloring = _color(g, settings, trace)
    if not coloring.is_total() or verify_strong(g, coloring):
        raise InternalCounterexample("final coloring failed verification", serialize_graph(g))
    return coloring, trace
