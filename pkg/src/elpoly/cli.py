"""Command-line interface: enumerate, hull, blg, bhr, verify-all, formulas."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import blg, bhr, enumeration, hull
from .circulant import InstanceParams, is_power_of_two
from .errors import ElpolyError
from .fixtures import load_fixtures
from .gseq import CostPermutation

PROG = "elpoly"


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


def _progress_printer(n: int):
    if n < 13 or not sys.stderr.isatty():
        return None

    def report(done: int, total: int) -> None:
        sys.stderr.write(f"\rn={n}: {done}/{total} chunks")
        sys.stderr.flush()
        if done == total:
            sys.stderr.write("\n")

    return report


def _enumerate(n: int, jobs: int, allow_long: bool) -> enumeration.VectorSet:
    return enumeration.enumerate_cycle_vectors(
        n, jobs=jobs, allow_long=allow_long, progress=_progress_printer(n)
    )


def cmd_enumerate(args) -> int:
    vset = _enumerate(args.n, args.jobs, args.allow_long)
    print(
        f"n={args.n}: {enumeration.cycle_count(args.n)} Hamiltonian cycles, "
        f"{len(vset)} distinct edge-length vectors"
    )
    if args.out:
        if args.format == "json":
            enumeration.write_json(vset, args.out)
        else:
            enumeration.write_csv(vset, args.out)
        print(f"wrote {args.out}")
    else:
        for t in vset.vectors:
            print(",".join(str(x) for x in t))
    return 0


def _hull_report(vset: enumeration.VectorSet) -> dict:
    ps = hull.PointSet.of(vset.vectors)
    vsum = hull.enumerate_vertices(ps)
    fsum = hull.enumerate_facets(ps)
    if vsum.vertices != fsum.vertices:
        raise AssertionError("vertex certification and double description disagree")
    return {
        "n": vset.n,
        "point_count": len(vset),
        "affine_dim": vsum.affine_dim,
        "vertex_count": vsum.vertex_count,
        "facet_count": fsum.facet_count,
        "vertices": [list(v) for v in vsum.vertices],
    }


def _check_hull_fixtures(report: dict) -> bool:
    fixtures = load_fixtures()
    n = report["n"]
    ok = True
    if n in fixtures.polytope_counts:
        want_v, want_f = fixtures.polytope_counts[n]
        got_v, got_f = report["vertex_count"], report["facet_count"]
        if (got_v, got_f) == (want_v, want_f):
            print(f"counts n={n}: {got_v} vertices, {got_f} facets PASS")
        else:
            print(
                f"counts n={n}: got {got_v}/{got_f}, expected {want_v}/{want_f} FAIL"
            )
            ok = False
    if n in fixtures.vertex_lists:
        got = {tuple(v) for v in report["vertices"]}
        want = set(fixtures.vertex_lists[n])
        if got == want:
            print(f"vertices n={n}: {len(want)} vertices PASS")
        else:
            print(f"vertices n={n}: FAIL")
            for v in sorted(want - got):
                print(f"  missing {v}")
            for v in sorted(got - want):
                print(f"  extra   {v}")
            ok = False
    if n not in fixtures.polytope_counts and n not in fixtures.vertex_lists:
        print(f"no reference data for n={n}")
        ok = False
    return ok


def cmd_hull(args) -> int:
    if args.infile:
        vset = enumeration.read_json(args.infile)
    elif args.n is not None:
        vset = _enumerate(args.n, args.jobs, args.allow_long)
    else:
        print("hull needs --n or --in", file=sys.stderr)
        return 2
    report = _hull_report(vset)
    print(_canonical_json(report))
    if args.check_fixtures:
        return 0 if _check_hull_fixtures(report) else 1
    return 0


def cmd_blg(args) -> int:
    params = InstanceParams.for_n(args.n)
    if args.count:
        print(blg.count_blg(params))
        return 0
    if args.path:
        prefix = tuple(int(x) for x in args.path.split(","))
        phi = CostPermutation.from_prefix(prefix, params.d)
        path = blg.build_blg_path(phi, params)
        print(",".join(str(v) for v in path.order))
        print("edge-length vector:", list(path.edge_vector().t))
        return 0
    rows = []
    for enc in blg.enumerate_encodings(params):
        vector = blg.encoding_to_vector(enc, params)
        row = {"encoding": enc.to_json(), "vector": list(vector.t)}
        if enc.s[params.k - 2] != blg.SKIP:
            row["extended"] = list(blg.extend_to_cycle(enc, params).t)
            if args.extend:
                row["cycle"] = list(blg.build_blg_cycle(enc, params))
        elif args.extend:
            continue
        rows.append(row)
    for row in rows:
        print(_canonical_json(row))
    return 0


def cmd_bhr(args) -> int:
    params = InstanceParams.for_n(args.n)
    if args.multisets:
        print(_canonical_json([list(t) for t in bhr.path_multisets(params)]))
        return 0
    if args.t is None:
        print("bhr needs --t (or --multisets)", file=sys.stderr)
        return 2
    t = tuple(int(x) for x in args.t.split(","))
    verdict = bhr.check_bhr(t, params)
    if args.realize:
        realized = bhr.realizable_path(t, params)
        verdict = bhr.BhrVerdict(
            feasible=verdict.feasible,
            violated_divisor=verdict.violated_divisor,
            realizable=realized,
        )
    print(_canonical_json(verdict.to_json()))
    return 0


def cmd_verify_all(args) -> int:
    fixtures = load_fixtures()
    ok = True

    for n in range(6, 13):
        report = _hull_report(_enumerate(n, args.jobs, allow_long=False))
        ok = _check_hull_fixtures(report) and ok

    params = InstanceParams.for_n(8)
    encodings = blg.enumerate_encodings(params)
    want_rows = fixtures.blg_rows_n8
    if [e.s for e in encodings] == [row.encoding.s for row in want_rows]:
        print("n=8 encodings: 8 rows PASS")
    else:
        print("n=8 encodings: FAIL")
        ok = False
    for row in want_rows:
        vec = blg.encoding_to_vector(row.encoding, params).t
        line_ok = vec == row.path_vector
        if row.encoding.s[params.k - 2] != blg.SKIP:
            ext = blg.extend_to_cycle(row.encoding, params).t
            line_ok = line_ok and ext == row.extended_vector
        status = "PASS" if line_ok else "FAIL"
        print(f"n=8 row {list(row.encoding.s)}: {status}")
        ok = ok and line_ok

    print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


def cmd_formulas(args) -> int:
    params = InstanceParams.for_n(args.n)
    prediction = hull.predicted_vertex_count(params)
    payload = {
        "n": params.n,
        "d": params.d,
        "predicted_vertices": prediction.to_json(),
    }
    if params.k is not None:
        payload["k"] = params.k
        payload["blg_path_count"] = blg.count_blg(params)
        if params.k >= 4:
            payload["vertex_lower_bound"] = blg.lower_bound_vertices(params)
            payload["crude_vertex_lower_bound"] = blg.crude_lower_bound(params)
    print(_canonical_json(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Edge-length polytope toolkit: enumerate Hamiltonian cycle "
        "edge-length vectors, certify hull vertices and facets, build greedy "
        "paths on circulant costs, and check divisor feasibility.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate cycle edge-length vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output file path")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hull", help="vertex/facet analysis of an enumerated set")
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="infile", help="read a vector-set JSON file")
    p.add_argument("--check-fixtures", action="store_true")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("blg", help="encodings and greedy paths for n = 2**k")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", default=False)
    group.add_argument("--count", action="store_true")
    group.add_argument("--path", help="comma-separated cost-permutation prefix")
    group.add_argument(
        "--extend", action="store_true", help="list only rows with certified cycles"
    )
    p.set_defaults(func=cmd_blg)

    p = sub.add_parser("bhr", help="divisor-constraint verdict for a path vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", help="comma-separated edge counts t1,...,td")
    p.add_argument("--realize", action="store_true")
    p.add_argument(
        "--multisets", action="store_true", help="list all realizable multisets instead"
    )
    p.set_defaults(func=cmd_bhr)

    p = sub.add_parser("verify-all", help="run every embedded reference comparison")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("formulas", help="closed-form counts for an instance size")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_formulas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ElpolyError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
