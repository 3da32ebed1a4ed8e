"""
Command-line front end.

    treespec count graph.txt
    treespec build --word "A2 C B C" [--dot]
    treespec enum --n 10 --alphabet simple --check
    treespec decode --t 28 --u 8 --alphabet full
    treespec regular --k 3 [--n 34]
    treespec mod --N 64 --u 17
    treespec zaremba --N 65536
    treespec cf --eval 2,1,1,1 --mod 5
    treespec census --n 6
    treespec probe --N 32

Every subcommand accepts --json. Exit status: 0 success, 1 failed
verification or undecodable input, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import algebra, cfrac, graph, modular, regular, spectrum, witness
from .errors import MalformedWord, TreeSpecError

log = logging.getLogger("treespec")

ORACLE_MAX_WEIGHT = 8
BRUTE_MAX_EDGES = 25


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj))
    else:
        print(text)


def cmd_count(args) -> int:
    g = graph.read_edgelist(args.file)
    value = graph.tau(g)
    ok = True
    if args.check:
        if g.m > BRUTE_MAX_EDGES:
            log.warning("skipping brute-force check: %d edges", g.m)
        else:
            ok = graph.tau_brute(g) == value
    _emit(graph.to_json_obj(g, value), args.json, str(value))
    return 0 if ok else 1


def cmd_build(args) -> int:
    word = witness.parse_word(args.word)
    w = witness.build(word)
    vec = witness.vector_of(w)
    predicted = witness.predicted_vector(word)
    tau_g = graph.tau(w.graph)
    ok = vec == predicted and tau_g == vec.t + vec.u
    if args.check and w.graph.m <= BRUTE_MAX_EDGES:
        ok = ok and witness.vector_of_brute(w) == vec
    if args.json:
        obj = graph.to_json_obj(w.graph, tau_g)
        obj.update({"word": witness.format_word(word), "t": str(vec.t), "u": str(vec.u),
                    "witness": list(w.witness_edge)})
        print(json.dumps(obj))
    else:
        print(f"vector: ({vec.t}, {vec.u})")
        print(f"tau: {tau_g}")
        if args.dot:
            sys.stdout.write(graph.to_dot(w.graph, highlight=w.witness))
        else:
            print(f"witness: {w.witness_edge[0]} {w.witness_edge[1]}")
            sys.stdout.write(graph.format_edgelist(w.graph))
    if not ok:
        print("verification failed: graph vector disagrees with matrix prediction", file=sys.stderr)
    return 0 if ok else 1


def cmd_enum(args) -> int:
    if args.alphabet == "simple":
        if args.n > spectrum.SIMPLE_MAX_N:
            raise UsageError(f"--n must be <= {spectrum.SIMPLE_MAX_N} for the simple alphabet")
        stream = spectrum.iter_simple(args.n)
        fmt, to_op, wt = spectrum.format_simple, spectrum.simple_to_opword, spectrum.simple_weight
        decode, expected = spectrum.decode_simple, algebra.count_simple_words(args.n)
    else:
        if args.n > spectrum.FULL_MAX_N:
            raise UsageError(f"--n must be <= {spectrum.FULL_MAX_N} for the full alphabet")
        stream = spectrum.iter_full(args.n)
        fmt, to_op, wt = spectrum.format_full, spectrum.full_to_opword, spectrum.full_weight
        decode, expected = spectrum.decode_full, algebra.count_full_words(args.n)

    vectors = []
    failures = 0
    for word, vec in stream:
        cert = spectrum.certificate(fmt(word), vec, wt(word))
        if args.json:
            print(json.dumps(cert))
        else:
            print(f"{cert['word'] or '-'}\t{vec.t}\t{vec.u}\t{cert['tau']}")
        if args.check:
            vectors.append(vec)
            if decode(vec) != word:
                failures += 1
            if wt(word) <= ORACLE_MAX_WEIGHT:
                built = witness.build(to_op(word))
                if witness.vector_of(built) != vec:
                    failures += 1
    if args.check:
        if len(vectors) != expected:
            print(f"check failed: {len(vectors)} words, expected {expected}", file=sys.stderr)
            failures += 1
        if not spectrum.all_distinct(vectors):
            print("check failed: duplicate vectors", file=sys.stderr)
            failures += 1
        status = "passed" if not failures else f"failed ({failures})"
        print(f"check {status}: {len(vectors)} distinct vectors, expected {expected}", file=sys.stderr)
    return 1 if failures else 0


def cmd_decode(args) -> int:
    vec = (args.t, args.u)
    if args.alphabet == "simple":
        word = spectrum.decode_simple(vec)
        text = spectrum.format_simple(word)
        ok = spectrum.simple_vector(word) == vec
    else:
        word = spectrum.decode_full(vec)
        text = spectrum.format_full(word)
        ok = spectrum.full_vector(word) == vec
    _emit({"word": text, "t": str(args.t), "u": str(args.u)}, args.json, text or "(empty)")
    return 0 if ok else 1


def cmd_regular(args) -> int:
    n = args.n if args.n is not None else regular.smallest_feasible_n(args.k)
    fam = regular.assemble_regular(args.k, n)
    ok = all(regular.predicted_tau(fam, i) == t for i, t in enumerate(fam.tau_values))
    if args.json:
        print(fam.to_json())
    else:
        m, deg2 = fam.group
        print(f"k={fam.k} n={fam.n} members={len(fam.members)} base group m={m} deg2={deg2} extra={fam.extra}")
        for word, t in zip(fam.words, fam.tau_values):
            print(f"{word}\t{t}")
    return 0 if ok else 1


def cmd_mod(args) -> int:
    if args.N < 2 or not 0 <= args.u < args.N:
        raise UsageError("need N >= 2 and 0 <= u < N")
    cert = modular.tau_mod_witness(args.u, args.N)
    ok = graph.tau(cert.graph.graph) % args.N == args.u
    if args.json:
        print(json.dumps(cert.to_json_obj()))
    else:
        obj = cert.to_json_obj()
        print(f"word: {obj['word'] or '-'}  opword: {obj['opword'] or '-'}")
        print(f"vector: ({obj['t']}, {obj['u_vec']})  tau: {obj['tau']}  vertices: {obj['vertices']}")
        if args.dot:
            sys.stdout.write(graph.to_dot(cert.graph.graph, highlight=cert.graph.witness))
    return 0 if ok else 1


def cmd_zaremba(args) -> int:
    if args.N < 4:
        raise UsageError("need N >= 4")
    certs = cfrac.zaremba_weak(args.N)
    ok = all(cfrac.cf_eval(c.cf) == (c.t, c.u) and c.u < args.N for c in certs)
    ok = ok and len(certs) >= cfrac.zaremba_floor(args.N)
    if args.json:
        print(json.dumps([c.to_json_obj() for c in certs]))
    else:
        for c in certs:
            print(f"{c.u}\t{c.t}\t[{','.join(map(str, c.cf))}]")
    return 0 if ok else 1


def cmd_cf(args) -> int:
    try:
        cf = cfrac.parse_cfrac(args.eval)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t, u = cfrac.cf_eval(cf)
    obj = {"cf": list(cf), "t": str(t), "u": str(u)}
    text = f"{t}/{u}"
    if args.mod is not None:
        residue = cfrac.cf_eval_mod(cf, args.mod)
        obj.update({"mod": args.mod, "residue": residue})
        text = str(residue)
    _emit(obj, args.json, text)
    return 0


def cmd_census(args) -> int:
    if not 1 <= args.n <= graph.CENSUS_MAX_N:
        raise UsageError(f"--n must be between 1 and {graph.CENSUS_MAX_N}")
    values = graph.census_connected(args.n)
    _emit({"n": args.n, "values": [str(v) for v in values]}, args.json, " ".join(map(str, values)))
    return 0


def cmd_probe(args) -> int:
    if not 2 <= args.N <= modular.PROBE_MAX_N:
        raise UsageError(f"--N must be between 2 and {modular.PROBE_MAX_N}")
    depth, reached = modular.diameter_probe(args.N)
    order = modular.sl2_order(args.N)
    _emit({"N": args.N, "max_word_len": depth, "elements_reached": reached, "group_order": order},
          args.json, f"N={args.N} max_word_len={depth} reached={reached}/{order}")
    return 0 if reached == order else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treespec", description="Spanning-tree count constructions")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "spanning trees of an edge-list file")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="cross-check against brute force")

    p = add("build", cmd_build, "build the witness graph of an A/B/C word")
    p.add_argument("--word", required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--check", action="store_true")

    p = add("enum", cmd_enum, "enumerate planar-feasible vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", choices=("simple", "full"), default="simple")
    p.add_argument("--check", action="store_true")

    p = add("decode", cmd_decode, "recover the word of a vector")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--alphabet", choices=("simple", "full"), default="simple")

    p = add("regular", cmd_regular, "family of k-regular graphs with distinct tau")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="defaults to the smallest n with two members")

    p = add("mod", cmd_mod, "planar graph with tau congruent to u mod N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--dot", action="store_true")

    p = add("zaremba", cmd_zaremba, "denominators with {1,2}-quotient expansions")
    p.add_argument("--N", type=int, required=True)

    p = add("cf", cmd_cf, "evaluate a continued fraction")
    p.add_argument("--eval", required=True, metavar="A1,A2,...")
    p.add_argument("--mod", type=int, default=None)

    p = add("census", cmd_census, "distinct tau over connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)

    p = add("probe", cmd_probe, "breadth-first diameter of SL2(Z_N) over {X, Y}")
    p.add_argument("--N", type=int, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except MalformedWord as exc:
        print(f"treespec: {exc}", file=sys.stderr)
        return 2
    except TreeSpecError as exc:
        print(f"treespec: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"treespec: {exc}", file=sys.stderr)
        return 2

def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
