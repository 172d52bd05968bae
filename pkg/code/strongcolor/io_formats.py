"""Text formats: PMG (embedded graphs), EL (edge lists) and coloring files.

PMG, line oriented, `#` starts a comment:

    pmg 1
    v 3
    E 0 1
    E 1 2
    E 2 0
    R 0: 0 2
    R 1: 0 1
    R 2: 1 2

Coloring files: `k <palette>` then one `c <edge id> <color>` per colored edge.
"""
from .errors import ColorOutOfRange, PmgSyntaxError
from .planar_multigraph import build_plane_multigraph, embed_edge_list
from .strong_coloring import PartialColoring


def _lines(text):
    """Yield (line number, fields) for every non-blank, non-comment line."""
    raw_lines = text.splitlines()
    if len(raw_lines) == 1 and " / " in raw_lines[0]:
        raw_lines = raw_lines[0].split(" / ")
    for no, line in enumerate(raw_lines, start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(no, fields):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise PmgSyntaxError(no, f"expected integers, got {' '.join(fields)!r}") from None


def parse_graph(text):
    """Parse PMG (keeps its embedding) or EL (embedded on the fly)."""
    lines = list(_lines(text))
    if lines and lines[0][1].split()[0] == "pmg":
        return _parse_pmg(lines)
    return _parse_edge_list(lines)


def _parse_pmg(lines):
    no, header = lines[0]
    if header.split() != ["pmg", "1"]:
        raise PmgSyntaxError(no, f"unsupported header {header!r}")
    vertex_count = None
    edges = []
    rotations = {}
    for no, line in lines[1:]:
        tag, _, rest = line.partition(" ")
        if tag == "v":
            if vertex_count is not None:
                raise PmgSyntaxError(no, "vertex count given twice")
            values = _ints(no, rest.split())
            if len(values) != 1 or values[0] < 0:
                raise PmgSyntaxError(no, "expected `v <n>` with n >= 0")
            vertex_count = values[0]
        elif tag == "E":
            pair = _ints(no, rest.split())
            if len(pair) != 2:
                raise PmgSyntaxError(no, "an edge needs exactly two endpoints")
            edges.append(tuple(pair))
        elif tag == "R":
            vertex, colon, ids = rest.partition(":")
            if not colon:
                raise PmgSyntaxError(no, "rotation line needs `R <v>: <edge ids>`")
            (v,) = _ints(no, [vertex.strip()])
            if v in rotations:
                raise PmgSyntaxError(no, f"rotation of vertex {v} given twice")
            rotations[v] = _ints(no, ids.split())
        else:
            raise PmgSyntaxError(no, f"unknown record {tag!r}")
    if vertex_count is None:
        raise PmgSyntaxError(lines[0][0], "missing `v <n>` record")
    for v in rotations:
        if not 0 <= v < vertex_count:
            raise PmgSyntaxError(lines[0][0], f"rotation given for unknown vertex {v}")
    return build_plane_multigraph(
        vertex_count, edges, [rotations.get(v, []) for v in range(vertex_count)])


def _parse_edge_list(lines):
    edges = []
    for no, line in lines:
        pair = _ints(no, line.split())
        if len(pair) != 2:
            raise PmgSyntaxError(no, "edge list lines hold exactly two vertex ids")
        if min(pair) < 0:
            raise PmgSyntaxError(no, "vertex ids are nonnegative")
        edges.append(tuple(pair))
    vertex_count = max((max(pair) for pair in edges), default=-1) + 1
    return embed_edge_list(vertex_count, edges)


def serialize_graph(g, fmt="pmg"):
    if fmt == "el":
        return "".join(f"{a} {b}\n" for a, b in g.edges)
    out = ["pmg 1", f"v {g.vertex_count}"]
    out.extend(f"E {a} {b}" for a, b in g.edges)
    out.extend(f"R {v}: {' '.join(str(e) for e in rot)}".rstrip() for v, rot in enumerate(g.rotations))
    return "\n".join(out) + "\n"


def parse_coloring(text, edge_count=None):
    lines = list(_lines(text))
    if not lines or lines[0][1].split()[0] != "k":
        raise PmgSyntaxError(lines[0][0] if lines else 1, "coloring file must start with `k <palette>`")
    no, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise PmgSyntaxError(no, "expected `k <palette>`")
    (palette,) = _ints(no, fields[1:])
    if palette < 1:
        raise PmgSyntaxError(no, f"palette size {palette} must be positive")
    assigned = {}
    for no, line in lines[1:]:
        fields = line.split()
        if fields[0] != "c" or len(fields) != 3:
            raise PmgSyntaxError(no, "expected `c <edge id> <color>`")
        edge, color = _ints(no, fields[1:])
        if edge < 0:
            raise PmgSyntaxError(no, f"negative edge id {edge}")
        if edge in assigned:
            raise PmgSyntaxError(no, f"edge {edge} colored twice")
        if not 1 <= color <= palette:
            raise ColorOutOfRange(f"line {no}: color {color} of edge {edge} outside [1, {palette}]")
        assigned[edge] = color
    size = edge_count if edge_count is not None else max(assigned, default=-1) + 1
    if any(edge >= size for edge in assigned):
        raise PmgSyntaxError(no, f"edge id beyond the graph's {size} edges")
    return PartialColoring(palette, tuple(assigned.get(e) for e in range(size)))


def serialize_coloring(coloring):
    out = [f"k {coloring.palette_size}"]
    out.extend(f"c {e} {c}" for e, c in enumerate(coloring.colors) if c is not None)
    return "\n".join(out) + "\n"
