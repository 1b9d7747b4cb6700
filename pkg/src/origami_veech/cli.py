"""Command-line front end: deterministic JSON reports on stdout.

Exit codes: 0 pass, 1 verification fail, 2 malformed input, 3 precondition
violation.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import covers, modular, origami, quartic, sl2
from .orbit import coset_action, orbit, orbit_to_dot, veech_generators


def _emit(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _load_origami(path):
    data = sys.stdin.read() if path is None else open(path).read()
    try:
        return origami.from_json_dict(json.loads(data))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as e:
        print(f"malformed origami input: {e}", file=sys.stderr)
        raise SystemExit(2)


def cmd_build(args):
    if args.kind == "w":
        _emit(origami.to_json_dict(covers.build_w()))
        return 0
    try:
        cfg = modular.TorsionConfig(args.n, args.p, args.q)
        flavor = covers.Flavor(int(args.flavor[0]), int(args.flavor[1]))
    except (ValueError, IndexError) as e:
        print(f"invalid parameters: {e}", file=sys.stderr)
        return 2
    if cfg.n % 2 == 0:
        print("warning: the verified theorem requires odd n; "
              "building anyway", file=sys.stderr)
    try:
        o = covers.build_dp(cfg, flavor)
    except (origami.NotConnected, covers.Unsolvable) as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return 2
    _emit(origami.to_json_dict(o))
    return 0


def cmd_veech(args):
    o = _load_origami(args.file)
    graph = orbit(o)
    if args.dot:
        sys.stdout.write(orbit_to_dot(graph))
        return 0
    action = coset_action(graph)
    gens = veech_generators(action)
    _emit({"index": action.size,
           "generators": [list(g.entries()) for g in gens],
           "congruence_spot_checks": {
               "all_generators_in_gamma_uu":
                   all(modular.in_gamma_uu(g) for g in gens)}})
    return 0


def cmd_verify_theorem(args):
    try:
        cfg = modular.TorsionConfig(args.n, args.p, args.q)
        report = covers.verify_theorem(cfg)
    except (ValueError, modular.NotOdd, modular.NotGeneralPosition) as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return 3
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_quartic(args):
    if args.sub == "singular":
        p = quartic.QuarticParams(*args.params)
        _emit({"params": [str(x) for x in p.triple()],
               "singular": quartic.is_singular(p)})
        return 0
    if args.sub == "orbit":
        p = quartic.QuarticParams(*args.params)
        orb = quartic.l_orbit(p)
        _emit({"orbit": [[str(x) for x in t] for t in orb],
               "size": len(orb)})
        return 0
    if args.sub == "transform":
        p = quartic.QuarticParams(*args.params)
        m = [args.matrix[0:3], args.matrix[3:6], args.matrix[6:9]]
        try:
            g = quartic.transform_quartic(quartic.quartic_form(p), m)
        except quartic.NotInvertible as e:
            print(f"precondition violated: {e}", file=sys.stderr)
            return 3
        _emit({"coefficients": {"{},{},{}".format(*e): str(c)
                                for e, c in sorted(g.items())}})
        return 0
    # lambda conversion
    try:
        if args.to_a is not None:
            _emit({"a": str(quartic.lambda_a_convert(args.to_a, "to_a"))})
        else:
            _emit({"lambda":
                   str(quartic.lambda_a_convert(args.to_lambda, "to_lambda"))})
    except quartic.ExcludedValue as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return 3
    return 0


def cmd_conj_lemma(args):
    p = args.p
    if p == 2 or p > 31 or not all(p % k for k in range(2, p)):
        print(f"p must be an odd prime <= 31, got {p}", file=sys.stderr)
        return 3
    count = 0
    for a, b, c, d in modular.enumerate_sl2(p):
        if (a + d) % p:
            continue
        sign, witness = modular.conj_to_rotation(modular.MatMod(p, a, b, c, d))
        count += 1
    _emit({"p": p, "trace_zero_count": count, "pass": True})
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="origami-veech")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct an origami")
    bsub = b.add_subparsers(dest="kind", required=True)
    bsub.add_parser("w")
    dp = bsub.add_parser("dp")
    dp.add_argument("--n", type=int, required=True)
    dp.add_argument("--p", type=int, required=True)
    dp.add_argument("--q", type=int, required=True)
    dp.add_argument("--flavor", required=True,
                    choices=["11", "00", "10", "01"])
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("veech", help="Veech group of an origami (JSON in)")
    v.add_argument("--file", default=None)
    v.add_argument("--dot", action="store_true",
                   help="emit the orbit graph as DOT instead of a report")
    v.set_defaults(func=cmd_veech)

    t = sub.add_parser("verify-theorem",
                       help="verify the predicted congruence Veech group")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--q", type=int, required=True)
    t.set_defaults(func=cmd_verify_theorem)

    q = sub.add_parser("quartic", help="quartic family computations")
    qsub = q.add_subparsers(dest="sub", required=True)
    for name in ("singular", "orbit"):
        s = qsub.add_parser(name)
        s.add_argument("params", type=_fraction, nargs=3)
    tr = qsub.add_parser("transform")
    tr.add_argument("--params", type=_fraction, nargs=3, required=True)
    tr.add_argument("--matrix", type=_fraction, nargs=9, required=True)
    lam = qsub.add_parser("lambda")
    group = lam.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-a", type=_fraction, default=None)
    group.add_argument("--to-lambda", type=_fraction, default=None)
    q.set_defaults(func=cmd_quartic)

    c = sub.add_parser("conj-lemma",
                       help="exhaustive trace-zero conjugacy check mod p")
    c.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_conj_lemma)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    raise SystemExit(args.func(args))


if __name__ == "__main__":
    main()
