#!/usr/bin/python3
"""Command line: python -m strongcolor.main <subcommand> ...

Graph files are PMG or plain edge lists; `-` reads standard input.
Exit codes: 0 success, 1 input error, 2 verification failure, 3 internal
invariant breach.
"""
import argparse
import sys
from collections import Counter
from fractions import Fraction

from strongcolor.config import load_settings
from strongcolor.discharging import audit, charges
from strongcolor.errors import StrongColorError, VerificationFailed
from strongcolor.exact_solver import strong_chromatic_index
from strongcolor.generator import GenSpec, generate, named_instance
from strongcolor.io_formats import parse_coloring, parse_graph, serialize_coloring, serialize_graph
from strongcolor.planar_multigraph import structure_report, trace_faces
from strongcolor.reducer import color_graph
from strongcolor.strong_coloring import induced_matching_lower, palette_used, verify_strong


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def emit(args, records, human):
    """Print key=value records with --porcelain, the human lines otherwise."""
    if args.porcelain:
        for key, value in records:
            print(f"{key}={value}")
    else:
        for line in human:
            print(line)


## --
## -- subcommands
## --

def cmd_color(args, settings):
    g = parse_graph(read_text(args.graph))
    coloring, trace = color_graph(g, settings)
    matching = induced_matching_lower(g, coloring, settings.palette)
    if args.trace:
        for line in trace.lines():
            print(line, file=sys.stderr)
    write_text(args.output, serialize_coloring(coloring))
    # with the coloring on stdout, the summary goes to stderr
    out = sys.stdout if args.output not in (None, "-") else sys.stderr
    records = [("edges", g.edge_count), ("palette", settings.palette),
               ("colors_used", palette_used(coloring)), ("steps", len(trace.entries)),
               ("widened", trace.extension_widened), ("induced_matching", len(matching))]
    if args.porcelain:
        for key, value in records:
            print(f"{key}={value}", file=out)
    else:
        print(f"Colored {g.edge_count} edges with {palette_used(coloring)} colors "
              f"in {len(trace.entries)} reduction steps; induced matching of size {len(matching)}",
              file=out)


def cmd_verify(args, settings):
    g = parse_graph(read_text(args.graph))
    coloring = parse_coloring(read_text(args.coloring), g.edge_count)
    violations = verify_strong(g, coloring)
    emit(args,
         [("violations", len(violations))] + [("violation", f"{v.e},{v.f},{v.color}") for v in violations],
         [f"edges {v.e} and {v.f} see each other and share color {v.color}" for v in violations]
         or [f"OK: strong {coloring.palette_size}-edge-coloring of {g.edge_count} edges"])
    if violations:
        raise VerificationFailed(f"{len(violations)} conflicting pairs")


def cmd_exact(args, settings):
    g = parse_graph(read_text(args.graph))
    result = strong_chromatic_index(g, args.max_k, settings.exact_max_edges, args.force)
    value = "exceeds" if result.exceeds else result.chi_s
    emit(args, [("chi_s", value), ("kmax", args.max_k)],
         [f"strong chromatic index exceeds {args.max_k}" if result.exceeds
          else f"strong chromatic index {result.chi_s}"])
    if args.output and result.witness is not None:
        write_text(args.output, serialize_coloring(result.witness))


def _fraction(x):
    return str(x) if x.denominator != 1 else str(x.numerator)


def cmd_charge(args, settings):
    g = parse_graph(read_text(args.graph))
    report = charges(g)
    records = [("total_initial", _fraction(report.total_initial)),
               ("total_final", _fraction(report.total_final))]
    records += [(f"face.{i}", f"{f.length},{_fraction(a)},{_fraction(b)}")
                for i, (f, a, b) in enumerate(zip(report.faces, report.face_initial, report.face_final))]
    records += [(f"vertex.{v}", f"{g.degree(v)},{_fraction(a)},{_fraction(b)}")
                for v, (a, b) in enumerate(zip(report.vertex_initial, report.vertex_final))]
    human = [f"{'element':>12} {'size':>5} {'initial':>8} {'final':>8}"]
    human += [f"{'face ' + str(i):>12} {f.length:>5} {_fraction(a):>8} {_fraction(b):>8}"
              for i, (f, a, b) in enumerate(zip(report.faces, report.face_initial, report.face_final))]
    human += [f"{'vertex ' + str(v):>12} {g.degree(v):>5} {_fraction(a):>8} {_fraction(b):>8}"
              for v, (a, b) in enumerate(zip(report.vertex_initial, report.vertex_final))]
    human.append(f"total initial {_fraction(report.total_initial)}, final {_fraction(report.total_final)}")
    emit(args, records, human)


def cmd_audit(args, settings):
    g = parse_graph(read_text(args.graph))
    report = audit(g)
    detected = report.detected.kind.value if report.detected else "none"
    records = [(f"predicate.{name.replace(' ', '_')}", int(holds)) for name, holds in report.predicates.items()]
    records += [("failing", len(report.failing)), ("detected", detected),
                ("floor_breaches", len(report.floor_breaches))]
    human = [f"{'holds' if holds else 'FAILS':>6}  {name}" for name, holds in report.predicates.items()]
    human.append(f"detector: {detected}")
    emit(args, records, human)


def cmd_gen(args, settings):
    if args.name:
        g = named_instance(args.name)
    else:
        if args.n is None:
            raise StrongColorError("gen needs --n or --name")
        g = generate(GenSpec(args.n, args.seed, args.p2, args.parallel))
    write_text(args.output, serialize_graph(g, args.format))


def cmd_stats(args, settings):
    g = parse_graph(read_text(args.graph))
    report = structure_report(g)
    faces = Counter(f.length for f in trace_faces(g))
    girth = "acyclic" if report.girth is None else report.girth
    histogram = " ".join(f"{k}:{faces[k]}" for k in sorted(faces))
    emit(args,
         [("vertices", g.vertex_count), ("edges", g.edge_count), ("max_degree", g.max_degree),
          ("components", len(report.components)), ("bridges", len(report.bridges)),
          ("girth", girth), ("two_vertices", len(report.two_vertices)), ("faces", histogram)],
         [f"vertices      {g.vertex_count}", f"edges         {g.edge_count}",
          f"max degree    {g.max_degree}", f"components    {len(report.components)}",
          f"bridges       {len(report.bridges)}", f"girth         {girth}",
          f"2-vertices    {len(report.two_vertices)}", f"face lengths  {histogram}"])


## --
## -- argument parsing
## --

class Parser(argparse.ArgumentParser):
    """Usage errors exit 1 like any other input error; 2 is reserved for failed verification."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def fraction_arg(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a fraction") from None
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"{text} is outside [0, 1]")
    return value


def int_at_least(minimum):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{value} must be at least {minimum}")
        return value
    return convert


SETTING_FLAGS = ("palette", "base_case", "max_frontier", "first_pass_nodes", "exact_max_edges", "verbose")


def settings_parser():
    """Flags overriding the STRONGCOLOR_* environment settings."""
    parser = Parser(add_help=False)
    parser.add_argument("--palette", type=int_at_least(1), help="Palette size (default 9).")
    parser.add_argument("--base-case", type=int_at_least(0), help="Largest |V| colored exactly.")
    parser.add_argument("--max-frontier", type=int_at_least(1), help="Largest frontier searched.")
    parser.add_argument("--first-pass-nodes", type=int_at_least(1), help="Node budget of the seeded pass.")
    parser.add_argument("--exact-max-edges", type=int_at_least(1), help="Edge guard of the exact solver.")
    parser.add_argument("--verbose", action="store_const", const=True, help="Report progress on stderr.")
    return parser


def settings_from(args):
    return load_settings().with_overrides(**{name: getattr(args, name, None) for name in SETTING_FLAGS})


def build_parser():
    common = Parser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="Print key=value records.")
    tuning = settings_parser()
    parser = Parser(description="Strong 9-edge-coloring of subcubic planar multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", parents=[common, tuning], help="Color a graph with the reduction algorithm.")
    p.add_argument("graph")
    p.add_argument("--trace", action="store_true", help="Print one line per reduction step to stderr.")
    p.add_argument("-o", "--output", help="Coloring file to write (default stdout).")
    p.set_defaults(handler=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="Check that a coloring is strong.")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("exact", parents=[common, tuning], help="Exact strong chromatic index.")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int_at_least(1), default=9)
    p.add_argument("--force", action="store_true", help="Ignore the edge-count guard.")
    p.add_argument("-o", "--output", help="Write an optimal coloring here.")
    p.set_defaults(handler=cmd_exact)

    p = sub.add_parser("charge", parents=[common], help="Initial and final discharging charges.")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_charge)

    p = sub.add_parser("audit", parents=[common], help="Structural predicates against the detector.")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("gen", parents=[common], help="Generate a random or named instance.")
    p.add_argument("--n", type=int_at_least(3))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p2", type=fraction_arg, default=Fraction(1, 4),
                   help="Subdivision probability, e.g. 0.25 or 1/4.")
    p.add_argument("--parallel", action="store_true", help="Allow parallel pairs.")
    p.add_argument("--name", help="Emit a named instance instead.")
    p.add_argument("--format", choices=("pmg", "el"), default="pmg")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("stats", parents=[common], help="Structural summary of a graph.")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_stats)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        settings = settings_from(args)
        args.handler(args, settings)
    except StrongColorError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(e.exit_code)
    except OSError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"An unexpected error occurred: {e}", file=sys.stderr)
        sys.exit(3)


if __name__ == "__main__":
    main()
