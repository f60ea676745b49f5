"""Command line front end: ``gbh <group> <command> ...``.

Exit codes: 0 holds or success, 1 fails, 2 unknown, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import borelcodes as bc
from . import calculus as calc
from . import forcinglab as fl
from . import ordinals as o
from . import spacelab as sl
from . import treemaps as tm

EXIT_OK, EXIT_FAILS, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_json(arg: str | None, default=None):
    """Inline JSON or a path to a JSON file."""
    if arg is None:
        return default
    text = arg.strip()
    if not text.startswith(("{", "[")):
        path = Path(arg)
        if not path.exists():
            raise InputError(f"no such file: {arg}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON ({exc.msg} at line {exc.lineno}, column {exc.colno})") from None


def _print_verdict(a, v: calc.Verdict) -> int:
    report = {"query": " ".join([a.op, *a.args]), "verdict": v.answer,
              "trace": [{"rule_id": rid, "citation": cit} for rid, cit in v.trace],
              "missing": list(v.missing)}
    if not a.no_timing:
        report["elapsed"] = round(time.perf_counter() - a.started, 6)
    print(json.dumps(report, indent=2))
    return v.exit_code


# -- ord -------------------------------------------------------------------------------


def cmd_ord(a) -> int:
    x = o.parse(a.expr)
    y = o.parse(a.other) if a.other else None
    op = a.op
    if op in ("add", "cmp") and y is None:
        raise InputError(f"ord {op} needs two ordinals")
    if op == "parse":
        print(x)
    elif op == "double":
        print(o.ord_double(x))
    elif op == "half":
        print(o.ord_half(x))
    elif op == "cof":
        print(o.ord_cof(x).value)
    elif op == "add":
        print(o.ord_add(x, y))
    elif op == "mulw":
        print(o.ord_mul_omega(x))
    elif op == "cmp":
        print(o.ord_cmp(x, y))
    return EXIT_OK


# -- pointclass --------------------------------------------------------------------------


def _context(a):
    obj = _load_json(a.ctx, {})
    return calc.load_context(obj)


def cmd_pointclass(a) -> int:
    ctx, sa, facts, evidence = _context(a)
    op = a.op
    if op == "normalize":
        trace: list = []
        p = calc.normalize(calc.parse_pointclass(a.args[0]), ctx, sa, trace)
        print(p)
        if a.trace:
            for rid, cit in trace:
                print(f"  {rid}: {cit}")
        return EXIT_OK
    if op == "dual":
        print(calc.dual(calc.parse_pointclass(a.args[0])))
        return EXIT_OK
    if op == "compare":
        if len(a.args) != 2:
            raise InputError("compare needs two pointclasses")
        p, q = (calc.parse_pointclass(s) for s in a.args)
        return _print_verdict(a, calc.compare(p, q, ctx, sa, facts))
    if op == "closure":
        p = calc.parse_pointclass(a.args[0])
        size = calc.parse_size(a.size) if a.size else None
        return _print_verdict(a, calc.closure(p, a.closure_op, size, ctx, sa, facts))
    if op == "universal":
        p = calc.parse_pointclass(a.args[0])
        return _print_verdict(a, calc.universal_exists(p, a.over, ctx, sa, facts))
    if op == "translate":
        if not a.args:
            raise InputError("translate needs a fact such as 'k+:le:3'")
        base, rel, bound = a.args[0].split(":")
        f = calc.parse_fact({"base": base, "rel": rel, "bound": bound})
        print(calc.translate_order(f, ctx, sa))
        return EXIT_OK
    if op == "collapse":
        if a.target is None:
            raise InputError("collapse needs --target")
        extra = [calc.parse_evidence(json.loads(e)) for e in a.args]
        target = o.parse(a.target)
        return _print_verdict(a, calc.collapse_criteria(evidence + extra, target, ctx, sa, a.base, facts))
    if op == "rules":
        for r in calc.RULES.values():
            print(f"{r.rule_id}: {r.citation}")
        return EXIT_OK
    raise InputError(f"unknown pointclass command {op}")


# -- space ------------------------------------------------------------------------------


def _space(a) -> sl.FiniteSpace:
    obj = _load_json(a.space, {"b": 2, "d": 2})
    return sl.FiniteSpace.from_json(obj, cap=a.cap or sl.DEFAULT_CAP)


def _basis(sp, text: str | None):
    stems = (text or "0,1").split(",")
    return [sl.basic(sp, s.strip()) for s in stems]


def _fmt(points) -> str:
    return "{" + ", ".join(sl.seq_str(x) for x in sorted(points)) + "}"


def cmd_space(a) -> int:
    sp = _space(a)
    if a.op == "basic":
        print(_fmt(sl.basic(sp, a.stem or "").members))
    elif a.op == "embed":
        for x, row in sl.embed_into_cantor(_basis(sp, a.basis)).items():
            print(f"{sl.seq_str(x)} -> {sl.seq_str(row)}")
    elif a.op == "universal":
        u = sl.build_universal(a.level, sp, _basis(sp, a.basis), a.m, cap=a.cap or sl.PARAM_CAP)
        secs = sorted(u.sections(), key=lambda s: (len(s), sorted(s)))
        print(f"parameters: 2^{u.param_len}, distinct sections: {len(secs)}")
        for s in secs:
            print(_fmt(s))
    return EXIT_OK


# -- code --------------------------------------------------------------------------------


def cmd_code(a) -> int:
    code = bc.CodeTree.from_json(_load_json(a.code))
    sp = _space(a)
    if a.op == "rank":
        print(bc.code_rank(code))
    elif a.op == "interpret":
        print(_fmt(bc.interpret(code, sp).members))
    elif a.op == "canonical":
        tree = bc.canonical_tree(code, sp, cap=a.cap or bc.CANON_CAP)
        print(f"branches: {len(tree.branches())}")
        print(f"projection: {_fmt(tree.project())}")
    return EXIT_OK


# -- embed -------------------------------------------------------------------------------


def cmd_embed(a) -> int:
    phi = tm.from_json(_load_json(a.map))
    if a.op == "check":
        p = tm.check_order_props(phi)
        for k in ("order_preserving", "strict", "preserves_incompatibility", "order_embedding"):
            print(f"{k}: {str(getattr(p, k)).lower()}")
        return EXIT_OK
    if a.op == "perfect":
        r = tm.check_exists_perfect(phi)
        print("holds" if r.exists else "fails")
        return EXIT_OK if r.exists else EXIT_FAILS
    if a.op == "body":
        for x, y in tm.body_map(phi).items():
            print(f"{sl.seq_str(x)} -> {y}")
        return EXIT_OK
    if a.op == "closed":
        ok = tm.closed_image_check(phi)
        print("holds" if ok else "fails")
        return EXIT_OK if ok else EXIT_FAILS
    raise InputError(f"unknown embed command {a.op}")


# -- forcing --------------------------------------------------------------------------------


def _forcing(a) -> fl.AlphaForcing:
    sp = sl.FiniteSpace.build(a.space_b, a.d, cap=a.cap or sl.DEFAULT_CAP)
    X = [sl.to_seq(s) for s in a.X.split(",")] if a.X else sp.sorted_points()
    A = [sl.to_seq(s) for s in a.A.split(",")] if a.A else []
    B = [sl.to_seq(s) for s in a.B.split(",")] if a.B else []
    smax = a.smax if a.smax is not None else (64 if a.op == "generic" else 2)
    return fl.AlphaForcing.build(a.alpha, a.b, sp, X, A, B, smax)


def cmd_forcing(a) -> int:
    F = _forcing(a)
    if a.op == "check":
        p = fl.condition_from_json(_load_json(a.cond, {}))
        v = F.violations(p)
        print("valid" if not v else "invalid")
        for line in v:
            print(f"  {line}")
        return EXIT_OK if not v else EXIT_FAILS
    if a.op == "density":
        if F.template.b < F.s_max:
            raise InputError(f"density below the budget needs b >= smax, got b={F.template.b}, smax={F.s_max}")
        conds = []
        for p in F.conditions():
            conds.append(p)
            if len(conds) > (a.cap or 20_000):
                raise InputError("condition count exceeds --cap; raise it rather than check a sample")
        bad = 0
        for t in F.template.internal():
            for x in sorted(F.X):
                for p in conds:
                    if p.size < F.s_max and not any(F.leq(r, p) and F.in_dense(t, x, r) for r in conds):
                        bad += 1
        print(f"conditions: {len(conds)}, non-extendable below budget: {bad}")
        return EXIT_OK if not bad else EXIT_FAILS
    if a.op == "generic":
        g = fl.build_generic(F, fl.standard_dense_list(F), seed=a.seed)
        print(json.dumps(g.to_json(), sort_keys=True))
        print(f"coded set: {_fmt(fl.interpret_generic(F, g).members)}")
        return EXIT_OK
    if a.op == "project":
        p = fl.condition_from_json(_load_json(a.cond, {}))
        F.check(p)
        H = [sl.to_seq(s) for s in a.H.split(",")] if a.H else []
        bad = F.projection_counterexamples(p, H, a.beta, F.conditions())
        print(f"restriction: {F.restrict(p, H, a.beta)}")
        print(f"counterexamples: {len(bad)}")
        return EXIT_OK if not bad else EXIT_FAILS
    if a.op == "link":
        p = fl.condition_from_json(_load_json(a.cond, {}))
        f, g = F.linked_map(F.check(p))
        print(json.dumps({"f": {sl.seq_str(k): sl.seq_str(v) for k, v in sorted(f.items())},
                          "g": {sl.seq_str(k): v for k, v in sorted(g.items())}}, sort_keys=True))
        return EXIT_OK
    raise InputError(f"unknown forcing command {a.op}")


# -- verify ---------------------------------------------------------------------------------


def cmd_verify(a) -> int:
    from . import verify

    only = None if a.which == "all" else [a.which]
    if only and a.which not in verify.CHECKS:
        raise InputError(f"unknown check {a.which}; choose from {', '.join(verify.CHECKS)}")
    results = verify.run_all(seed=a.seed, only=only)
    for r in results:
        print(r.line(timing=not a.no_timing))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILS


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gbh", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, help="size cap for enumerations")
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--no-timing", action="store_true", help="omit timings for comparable output")
    sub = ap.add_subparsers(dest="group", required=True)

    p = sub.add_parser("ord", help="ordinal arithmetic", parents=[common])
    p.add_argument("op", choices=["parse", "double", "half", "cof", "add", "mulw", "cmp"])
    p.add_argument("expr")
    p.add_argument("other", nargs="?")
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("pointclass", help="pointclass calculus", parents=[common])
    p.add_argument("op", choices=["normalize", "dual", "compare", "closure", "universal",
                                  "translate", "collapse", "rules"])
    p.add_argument("args", nargs="*")
    p.add_argument("--ctx", help="context JSON (inline or file)")
    p.add_argument("--op", dest="closure_op", choices=calc.OPS, default="union")
    p.add_argument("--size", help="family size such as '<cofk' or '=kappa'")
    p.add_argument("--over", choices=["cantor", "self"], default="cantor")
    p.add_argument("--target")
    p.add_argument("--base", choices=[calc.K, calc.KPLUS], default=calc.KPLUS)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_pointclass)

    p = sub.add_parser("space", help="finite spaces and universal sets", parents=[common])
    p.add_argument("op", choices=["basic", "embed", "universal"])
    p.add_argument("--space", help='space JSON such as {"b":2,"d":2}')
    p.add_argument("--stem")
    p.add_argument("--basis", help="comma-separated stems")
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("code", help="Borel codes", parents=[common])
    p.add_argument("op", choices=["rank", "interpret", "canonical"])
    p.add_argument("code")
    p.add_argument("--space")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("embed", help="tree maps", parents=[common])
    p.add_argument("op", choices=["check", "perfect", "body", "closed"])
    p.add_argument("map")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("forcing", help="the bounded separating forcing", parents=[common])
    p.add_argument("op", choices=["check", "density", "generic", "project", "link"])
    p.add_argument("--alpha", type=int, default=2)
    p.add_argument("--b", type=int, default=3, help="template branching")
    p.add_argument("--space-b", type=int, default=2, help="alphabet of the point space")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--smax", type=int, help="condition budget (2, or 64 for generic)")
    p.add_argument("--X")
    p.add_argument("--A")
    p.add_argument("--B")
    p.add_argument("--H")
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--cond", help="condition JSON")
    p.set_defaults(func=cmd_forcing)

    p = sub.add_parser("verify", help="run the acceptance checks", parents=[common])
    p.add_argument("which", nargs="?", default="all")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    a.started = time.perf_counter()
    try:
        return a.func(a)
    except o.ParseError as exc:
        print(f"error: line 1: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyError as exc:
        print(f"error: missing field {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, o.OrdinalError, calc.CalculusError, sl.SpaceError, bc.CodeError,
            tm.TreeMapError, fl.ForcingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
