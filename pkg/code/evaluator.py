#! /usr/bin/python3

import sys
import time
from collections import Counter
from math import ceil

from joblib import Parallel, delayed
from tqdm import tqdm

from strongcolor.discharging import audit
from strongcolor.errors import (DetectorGap, Disconnected, ExtensionImpossible, HasBridge,
                                InternalCounterexample, StrongColorError)
from strongcolor.generator import TARGETED, corpus, instance_names, named_instance
from strongcolor.main import Parser, settings_from, settings_parser
from strongcolor.reducer import DELETING, color_graph
from strongcolor.strong_coloring import (greedy_bound, greedy_strong, induced_matching_lower,
                                         palette_used, verify_strong)


## --
## -- color, verify and audit one instance
## --

def run_instance(name, g, settings):
    outcome = {"name": name, "edges": g.edge_count, "kinds": Counter(), "error": None,
               "palette": 0, "greedy": 0, "widened": 0, "budget": 0, "audited": False,
               "violations": 0, "matching_short": False, "seconds": 0.0}
    start = time.perf_counter()
    try:
        coloring, trace = color_graph(g, settings)
        outcome["palette"] = palette_used(coloring)
        outcome["violations"] = len(verify_strong(g, coloring))
        outcome["kinds"].update(str(kind) for kind in trace.kinds())
        outcome["widened"] = trace.extension_widened
        outcome["budget"] = trace.first_pass_budget_exhausted
        matching = induced_matching_lower(g, coloring, settings.palette)
        outcome["matching_short"] = len(matching) < ceil(g.edge_count / settings.palette)
        outcome["greedy"] = palette_used(greedy_strong(g))
    except StrongColorError as e:
        outcome["error"] = type(e).__name__
    try:
        audit(g)
        outcome["audited"] = True
    except (Disconnected, HasBridge):
        pass
    except DetectorGap:
        outcome["error"] = outcome["error"] or "DetectorGap"
    outcome["seconds"] = time.perf_counter() - start
    return outcome


def targeted(settings):
    """Named instances reduced all the way down, so that each first configuration is applied."""
    full = settings.with_overrides(base_case=0)
    return [(f"targeted-{name}", named_instance(name), full) for name in TARGETED]


def missing_kinds(outcomes):
    seen = set()
    for o in outcomes:
        seen.update(o["kinds"])
    return [str(kind) for kind in DELETING if str(kind) not in seen]


## --
## -- Compute and print statistics table
## --

def row(txt) :
    return txt + ' '*(28-len(txt))


def print_statistics(outcomes):
    errors = Counter(o["error"] for o in outcomes if o["error"])
    kinds = Counter()
    for o in outcomes:
        kinds.update(o["kinds"])
    seconds = [o["seconds"] for o in outcomes]

    print(row("instances") + f"{len(outcomes):>8}")
    print(row("audited (bridgeless)") + f"{sum(o['audited'] for o in outcomes):>8}")
    print(row("max palette") + f"{max((o['palette'] for o in outcomes), default=0):>8}")
    print(row("max greedy palette") + f"{max((o['greedy'] for o in outcomes), default=0):>8}"
          + f"   (bound {greedy_bound(3)})")
    print(row("verification failures") + f"{sum(o['violations'] > 0 for o in outcomes):>8}")
    print(row("short induced matchings") + f"{sum(o['matching_short'] for o in outcomes):>8}")
    for error in (ExtensionImpossible, DetectorGap, InternalCounterexample):
        print(row(error.__name__) + f"{errors.pop(error.__name__, 0):>8}")
    for name, count in sorted(errors.items()):
        print(row(name) + f"{count:>8}")
    print(row("widened passes") + f"{sum(o['widened'] for o in outcomes):>8}")
    print(row("first-pass budget exhausted") + f"{sum(o['budget'] for o in outcomes):>8}")
    if seconds:
        print(row("mean seconds") + f"{sum(seconds) / len(seconds):>8.3f}")
        print(row("max seconds") + f"{max(seconds):>8.3f}")
    print("------------------------------------------------------------------------------")
    for kind, count in sorted(kinds.items()):
        print(row(kind) + f"{count:>8}")
    missing = missing_kinds(outcomes)
    print(row("kinds never reduced") + f"{len(missing):>8}" + (f"   ({', '.join(missing)})" if missing else ""))


def failed(outcomes):
    return (any(o["error"] or o["violations"] or o["matching_short"] for o in outcomes)
            or bool(missing_kinds(outcomes)))


## --
## -- Usage as standalone program:  evaluator.py --count N --n N --seed S [--jobs J]
## --

def main():
    parser = Parser(description="Color, verify and audit a generated corpus.", parents=[settings_parser()])
    parser.add_argument("--count", type=int, default=1000, help="Number of random instances.")
    parser.add_argument("--n", type=int, default=200, help="Largest random instance size.")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1, help="Worker threads.")
    args = parser.parse_args()

    try:
        settings = settings_from(args)
        instances = [(name, g, settings) for name, g in
                     tqdm(corpus(args.count, args.n, args.seed), total=args.count + len(instance_names()),
                          desc="Generating", file=sys.stderr)]
        instances += targeted(settings)
        outcomes = Parallel(n_jobs=args.jobs, prefer="threads")(
            delayed(run_instance)(name, g, instance_settings)
            for name, g, instance_settings in tqdm(instances, desc="Coloring", file=sys.stderr))
        print_statistics(outcomes)
    except StrongColorError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(e.exit_code)
    except Exception as e:
        print(f"An unexpected error occurred: {e}", file=sys.stderr)
        sys.exit(3)
    if failed(outcomes):
        sys.exit(3)


if __name__ == "__main__":
    main()
