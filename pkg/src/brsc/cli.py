"""Command-line front end.  Every command prints one JSON object carrying
``"schema": 1``.  Exit codes: 0 ok, 1 domain error, 2 malformed input."""

import argparse
import json
import os
import statistics
import sys
import tempfile
import time

import numpy as np

from . import homology, homotopy, ordercx, shelling
from .complex import classify
from .errors import BRSCError, ParseError
from .flats import all_flats
from .gamma import component_report, graph_of_flats
from .instances import example, random_simple_dim2_matrix
from .textio import format_faces, read_complex

SCHEMA = 1


def _facets_json(c):
    from ._bits import lex_key

    return [list(c.names(f)) for f in sorted(c.facets, key=lex_key)]


def cmd_faces(c, args):
    return {"dim": c.dim, "facets": _facets_json(c), "face_count": len(c.faces)}


def cmd_flats(c, args):
    return all_flats(c).to_json()


def cmd_graph_of_flats(c, args):
    g = graph_of_flats(c)
    return g.to_json(component_report(c, g))


def cmd_pi1(c, args):
    return homotopy.pi1_rank(c).to_json()


def cmd_shellable(c, args):
    return {"shellable": shelling.is_shellable(c, timeout_ms=args.timeout_ms)}


def cmd_shelling(c, args):
    return shelling.find_shelling(c, timeout_ms=args.timeout_ms).to_json()


def cmd_betti(c, args):
    if c.dim <= 2 and shelling.is_shellable(c, timeout_ms=args.timeout_ms):
        s = shelling.find_shelling(c, timeout_ms=args.timeout_ms)
        return {"betti": shelling.betti_from_shelling(c, s), "source": "shelling"}
    return {"betti": homology.reduced_homology(c).betti, "source": "homology"}


def cmd_homology(c, args):
    return homology.reduced_homology(c).to_json()


def cmd_order_complex(c, args):
    oc = ordercx.order_complex(all_flats(c))
    found = ordercx.ord_shelling(oc.lattice, timeout_ms=args.timeout_ms)
    return {
        "vertices": list(oc.complex.vertices),
        "facets": _facets_json(oc.complex),
        "shellable": found is not None,
    }


def cmd_el_check(c, args):
    lat = all_flats(c)
    if not args.labels:
        raise ParseError("el-check needs --labels FILE")
    xi = ordercx.parse_labeling(lat, open(args.labels).read())
    ok, bad = ordercx.verify_el_labeling(lat, xi)
    return {"el_labeling": ok, "failing_interval": list(bad) if bad else None}


def cmd_analyze(c, args):
    timing = {}
    out = {}

    def stage(name, fn):
        t0 = time.perf_counter()
        out.update(fn(c, args))
        timing[name] = round(time.perf_counter() - t0, 6)

    prof = classify(c)
    out["profile"] = {
        "dimension": prof.dimension,
        "simple": prof.simple,
        "pure": prof.pure,
        "connected": prof.connected,
        "facets": prof.facet_count,
    }
    stage("flats", lambda c, a: {"flat_count": len(all_flats(c))})
    if prof.connected:
        stage("graph_of_flats", lambda c, a: {"components": component_report(c).to_json()})
        stage("pi1", lambda c, a: {"pi1_rank": homotopy.pi1_rank(c).rank})
    stage("shellable", cmd_shellable)
    stage("homology", cmd_homology)
    if c.dim <= 2 and out["shellable"]:
        stage("betti_from_shelling", lambda c, a: {"betti_from_shelling": cmd_betti(c, a)["betti"]})
    stage("scm", lambda c, a: {"sequentially_cohen_macaulay": homology.is_sequentially_cohen_macaulay(c)[0]})
    out["timing"] = timing
    return out


def cmd_bench(args):
    sizes = [n for n in (40, 60, 80, 120, 160) if n <= args.max_n]
    if args.dim != 2:
        raise BRSCError("the benchmark covers the dimension-2 shellability decision only")
    if len(sizes) < 2:
        raise BRSCError("need at least two sizes; raise --max-n")
    points = []
    for n in sizes:
        times = []
        for rep in range(args.reps):
            m = random_simple_dim2_matrix(args.seed + 1000 * n + rep, n)
            t0 = time.perf_counter()
            shelling.decide_shellable_matrix(m)
            times.append(time.perf_counter() - t0)
        points.append([n, statistics.median(times)])
    xs = np.log([p[0] for p in points])
    ys = np.log([max(p[1], 1e-9) for p in points])
    slope = float(np.polyfit(xs, ys, 1)[0])
    return {"points": points, "slope": slope}


COMMANDS = {
    "analyze": cmd_analyze,
    "faces": cmd_faces,
    "flats": cmd_flats,
    "graph-of-flats": cmd_graph_of_flats,
    "pi1": cmd_pi1,
    "shellable": cmd_shellable,
    "shelling": cmd_shelling,
    "betti": cmd_betti,
    "homology": cmd_homology,
    "order-complex": cmd_order_complex,
    "el-check": cmd_el_check,
}


def build_parser():
    p = argparse.ArgumentParser(prog="brsc", description="Boolean representable simplicial complexes")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--out")
        sp.add_argument("--timeout-ms", type=int, default=None)
        if name == "el-check":
            sp.add_argument("--labels")
    ex = sub.add_parser("example")
    ex.add_argument("name")
    ex.add_argument("--t", type=int, default=None)
    ex.add_argument("--emit")
    ex.add_argument("--out")
    b = sub.add_parser("bench")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--max-n", type=int, default=160)
    b.add_argument("--dim", type=int, default=2)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--out")
    return p


def _write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d)
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def run(argv):
    """Returns (exit code, report dict)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), {}
    try:
        if args.command == "bench":
            report = cmd_bench(args)
        elif args.command == "example":
            params = {} if args.t is None else {"t": args.t}
            c = example(args.name, **params)
            text = format_faces(c)
            if args.emit:
                _write(args.emit, text)
            report = {"name": args.name, "vertices": list(c.vertices), "facets": _facets_json(c)}
        else:
            try:
                c, _ = read_complex(args.file)
            except OSError as exc:
                raise ParseError(f"cannot read {args.file}: {exc.strerror}") from None
            report = COMMANDS[args.command](c, args)
    except ParseError as exc:
        return 2, {"schema": SCHEMA, "error": str(exc)}
    except BRSCError as exc:
        return 1, {"schema": SCHEMA, "error": str(exc)}
    report = {"schema": SCHEMA, **report}
    if getattr(args, "out", None):
        _write(args.out, json.dumps(report, indent=2) + "\n")
    return 0, report


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, report = run(argv)
    if not report:
        return code
    stream = sys.stdout if code == 0 else sys.stderr
    if code != 0 or not any(a == "--out" or a.startswith("--out=") for a in argv):
        print(json.dumps(report), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
