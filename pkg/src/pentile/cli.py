"""Command-line surface: construct, enumerate, verify, transform,
count and export tilings.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import build as b
from . import docio
from . import draw
from . import orbits as o
from . import search as s
from . import tiling as tm
from . import transforms as tr
from .avc import enumerate_arrangements, parse_avc
from .tiling import ORIENTED, UNORIENTED, Tiling

OK, FAIL, USAGE, INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _avc_arg(text):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as f:
            text = f.read().strip()
    return parse_avc(text)


def _load(path):
    try:
        return docio.load(path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise InputError("bad tiling document %s: %s" % (path, exc))


def _hexname(t, policy=ORIENTED):
    return tm.canonical_code(t, policy).hex()[:16]


def _arrangement_text(arr):
    return "".join(tm.letter(l) for l in arr.word)


def _write_docs(outdir, tilings, meta, policy=ORIENTED):
    os.makedirs(outdir, exist_ok=True)
    names = []
    for t in tilings:
        name = _hexname(t, policy)
        info = dict(meta)
        info["canonical_code"] = tm.canonical_code(t, policy).hex()
        docio.save(os.path.join(outdir, name + ".json"), t, info)
        names.append(name)
    return names


def _blank_codes(tilings, policy):
    return {tm.canonical_code(Tiling(t.twin, t.nxt, [0] * len(t.corner)),
                              policy) for t in tilings}


# -- subcommands -------------------------------------------------------


def _cmd_construct(args, argv):
    meta = {"command": "construct " + " ".join(argv[1:])}
    if args.what == "platonic":
        if not args.base:
            raise InputError("--base is required for platonic")
        out = [b.platonic(args.base)]
    elif args.what == "psub":
        if not args.base:
            raise InputError("--base is required for psub")
        out = [b.pentagonal_subdivision(b.platonic(args.base),
                                        args.chirality)]
    elif args.what == "spsub":
        if args.f != 36:
            raise InputError("only --f 36 is supported for spsub")
        quads, _ = s.enumerate_quad_substrates(
            18, {4: 12, 3: 8}, forbid_adjacent_degree=3, jobs=args_jobs())
        seen = {}
        for q in quads:
            for t in b.simple_pentagonal_subdivisions(q):
                seen.setdefault(tm.canonical_code(t, UNORIENTED), t)
        out = [seen[k] for k in sorted(seen)]
    elif args.what == "earthmap":
        if not args.f:
            raise InputError("--f is required for earthmap")
        out = [b.earth_map(args.f)]
    elif args.what == "rotmod":
        if not args.f:
            raise InputError("--f is required for rotmod")
        out = [b.rotation_modification(args.f, args.turns)]
    elif args.what == "patches":
        out = b.glue_patch_tilings(jobs=args_jobs())
    else:
        raise InputError("unknown construction %r" % args.what)
    names = _write_docs(args.out, out, meta)
    with open(os.path.join(args.out, "summary.txt"), "w") as f:
        f.write("classes: %d\n" % len(out))
        for name in names:
            f.write(name + ".json\n")
    print("wrote %d tiling(s) to %s" % (len(out), args.out))
    return OK


def args_jobs(default=None):
    return default or min(8, os.cpu_count() or 1)


def _cmd_enumerate(args, argv):
    avc = _avc_arg(args.avc)
    policy = args.mirror
    labels = [l for l, m in enumerate(avc.pentagon) for _ in range(m)]
    arrs = enumerate_arrangements(labels)
    if args.arrangement != "all":
        idx = int(args.arrangement)
        if not 0 <= idx < len(arrs):
            raise InputError("arrangement index %d out of range 0..%d"
                             % (idx, len(arrs) - 1))
        arrs = [arrs[idx]]
    config = s.SearchConfig(arrangements=arrs, mirror_policy=policy,
                            solution_cap=args.cap,
                            parallel_width=args.jobs)
    triples = s.enumerate_by_arrangement(avc, config)
    syms = s.avc_symmetries(avc)
    seen = {}
    for _, part, _ in triples:
        for t in part:
            key = min(tm.canonical_code(tm.relabel_corners(t, p), policy)
                      for p in syms)
            seen.setdefault(key, t)
    reps = sorted((tm.canonical_form(t, policy) for t in seen.values()),
                  key=lambda t: tm.canonical_code(t, policy))
    meta = {"command": "enumerate " + " ".join(argv[1:]),
            "avc": avc.render(), "mirror": policy}
    names = _write_docs(args.out, reps, meta, policy)
    stats = s.SearchStats()
    for _, _, st in triples:
        stats.merge(st)
    unlabeled = _blank_codes(reps, policy)
    with open(os.path.join(args.out, "summary.txt"), "w") as f:
        f.write("avc: %s\n" % avc.render())
        f.write("mirror: %s\n" % policy)
        f.write("labeled classes: %d\n" % len(reps))
        f.write("unlabeled classes: %d\n" % len(unlabeled))
        for arr, part, st in triples:
            f.write("arrangement %s: %d solution(s)\n"
                    % (_arrangement_text(arr), len(part)))
        for k, v in stats.as_dict().items():
            f.write("%s: %s\n" % (k, v))
    with open(os.path.join(args.out, "classes.csv"), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["index", "file", "faces", "vertices", "census"])
        for i, (name, t) in enumerate(zip(names, reps)):
            w.writerow([i, name + ".json", t.face_count, t.vertex_count,
                        tm.census_text(tm.vertex_census(t))])
    for name, t in zip(names, reps):
        draw.save_png(os.path.join(args.out, name + ".png"), t, title=name)
    print("labeled classes: %d" % len(reps))
    print("unlabeled classes: %d" % len(unlabeled))
    return OK


def _cmd_verify(args, argv):
    t = _load(args.tiling)
    avc = _avc_arg(args.avc)
    problems = s.verify_tiling(t, avc)
    if problems:
        print("fail: %s" % problems[0])
        return FAIL
    print("pass")
    return OK


def _cmd_reduce(args, argv):
    m = tr.get_map(args.map)
    if args.tiling:
        t2 = tr.reduce_tiling(_load(args.tiling), m)
        print(json.dumps(docio.document(t2, {"map": args.map})))
    else:
        print(tr.reduce_avc(_avc_arg(args.avc), m).render())
    return OK


def _cmd_split(args, argv):
    t = _load(args.tiling)
    m = tr.get_map(args.map)
    avc = _avc_arg(args.target_avc)
    labels = [l for l, mult in enumerate(avc.pentagon) for _ in range(mult)]
    arrs = enumerate_arrangements(labels)
    if not 0 <= args.arrangement < len(arrs):
        raise InputError("arrangement index %d out of range 0..%d"
                         % (args.arrangement, len(arrs) - 1))
    results = tr.split_tilings(t, arrs[args.arrangement], m, avc)
    print("splittings: %d" % len(results))
    for t2 in results:
        print(json.dumps(docio.document(t2, {"map": args.map})))
    return OK


def _cmd_count(args, argv):
    if args.burnside:
        print(o.burnside_face_signs(args.burnside))
    elif args.orbits:
        print(o.direct_orbit_count(args.orbits))
    else:
        t = _load(args.beta)
        pairs = o.beta_slot_pairs(t)
        orbit_count, raw = o.count_beta_assignments(t, pairs, ORIENTED)
        print("%d raw=%d" % (orbit_count, raw))
    return OK


def _cmd_quads(args, argv):
    census = {}
    for term in args.census.split(","):
        deg, _, count = term.partition(":")
        census[int(deg)] = int(count)
    reps, _ = s.enumerate_quad_substrates(
        args.faces, census, forbid_adjacent_degree=args.forbid_adjacent_deg,
        jobs=args_jobs())
    print("maps: %d" % len(reps))
    for t in reps:
        print(_hexname(t, UNORIENTED))
    return OK


def _cmd_canon(args, argv):
    t = _load(args.tiling)
    print(tm.canonical_code(t, args.mirror).hex())
    return OK


def _cmd_export(args, argv):
    t = _load(args.tiling)
    if not args.svg and not args.dot:
        raise InputError("need --svg and/or --dot")
    if args.svg:
        draw.save_svg(args.svg, t)
    if args.dot:
        draw.save_dot(args.dot, t)
    return OK


# -- argument grammar --------------------------------------------------


def _parser():
    p = argparse.ArgumentParser(prog="pentile")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a named tiling family")
    c.add_argument("--what", required=True,
                   choices=["platonic", "psub", "spsub", "earthmap",
                            "rotmod", "patches"])
    c.add_argument("--base")
    c.add_argument("--chirality", choices=["left", "right"],
                   default="right")
    c.add_argument("--f", type=int)
    c.add_argument("--turns", type=int, choices=[1, 2], default=1)
    c.add_argument("--out", required=True)
    c.set_defaults(fn=_cmd_construct)

    e = sub.add_parser("enumerate", help="search all tilings of an AVC")
    e.add_argument("--avc", required=True)
    e.add_argument("--arrangement", default="all")
    e.add_argument("--mirror", choices=[ORIENTED, UNORIENTED],
                   default=ORIENTED)
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--cap", type=int)
    e.add_argument("--out", required=True)
    e.set_defaults(fn=_cmd_enumerate)

    v = sub.add_parser("verify", help="check a tiling against an AVC")
    v.add_argument("--tiling", required=True)
    v.add_argument("--avc", required=True)
    v.set_defaults(fn=_cmd_verify)

    r = sub.add_parser("reduce", help="apply a named label reduction")
    r.add_argument("--map", required=True)
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--tiling")
    g.add_argument("--avc")
    r.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("split", help="all splittings toward a finer AVC")
    sp.add_argument("--tiling", required=True)
    sp.add_argument("--map", required=True)
    sp.add_argument("--target-avc", required=True)
    sp.add_argument("--arrangement", type=int, required=True)
    sp.set_defaults(fn=_cmd_split)

    ct = sub.add_parser("count", help="orbit and assignment counts")
    g = ct.add_mutually_exclusive_group(required=True)
    g.add_argument("--burnside", metavar="SOLID")
    g.add_argument("--beta", metavar="FILE")
    g.add_argument("--orbits", metavar="SOLID")
    ct.set_defaults(fn=_cmd_count)

    q = sub.add_parser("quads", help="quadrilateral substrate search")
    q.add_argument("--faces", type=int, required=True)
    q.add_argument("--census", required=True)
    q.add_argument("--forbid-adjacent-deg", type=int)
    q.set_defaults(fn=_cmd_quads)

    cn = sub.add_parser("canon", help="print the canonical code")
    cn.add_argument("--tiling", required=True)
    cn.add_argument("--mirror", choices=[ORIENTED, UNORIENTED],
                    default=ORIENTED)
    cn.set_defaults(fn=_cmd_canon)

    x = sub.add_parser("export", help="write SVG or Graphviz dot")
    x.add_argument("--tiling", required=True)
    x.add_argument("--svg")
    x.add_argument("--dot")
    x.set_defaults(fn=_cmd_export)
    return p


def run(argv) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else OK
    try:
        return args.fn(args, ["pentile"] + list(argv))
    except (InputError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE
    except AssertionError as exc:
        print("internal: %s" % exc, file=sys.stderr)
        return INTERNAL


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
