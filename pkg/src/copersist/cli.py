"""Command line front end.

Exit codes: 0 success, 1 a property was violated (or a cross-check
disagreed), 2 bad input or any other error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import closure, decompose, graphs, properties, transforms
from .core import BudgetExceededError, Monomial, MonomialIdeal, MonomialPrime, Ring, colon, intersect, power, radical
from .fixtures import BY_ID, CORPUS, Fixture, run_check, verify
from .parse import ParseError, parse_graph, parse_ideal, parse_monomial_exps

PROPERTIES = (
    "copersistence",
    "persistence",
    "strong-persistence",
    "normally-torsion-free",
    "nearly-copersistence",
    "generalized-nearly-copersistence",
    "stabilization",
)
GRAPH_OPS = ("edge-ideal", "cover-ideal", "covers", "bipartite", "odd-cycles", "almost-bipartite", "hochster")


class UsageError(Exception):
    pass


# ---- input --------------------------------------------------------------


def _read_source(spec: str) -> Fixture | str:
    if spec in BY_ID:
        return BY_ID[spec]
    if spec == "-" or os.path.isfile(spec):
        if spec == "-":
            text = sys.stdin.read()
        else:
            with open(spec) as fh:
                text = fh.read()
        try:
            data = json.loads(text)
        except ValueError:
            return text
        if isinstance(data, dict) and "source" in data:
            return Fixture.from_dict(data)
        raise UsageError(f"{spec}: JSON input must be an exported fixture")
    if spec.lstrip().startswith(("ring", "ideal", "graph")):
        return spec
    raise UsageError(f"{spec!r} is neither a fixture id, a file, nor an expression")


def load_ideal(spec: str) -> MonomialIdeal:
    src = _read_source(spec)
    if isinstance(src, Fixture):
        return src.ideal()
    if src.lstrip().startswith("graph"):
        raise UsageError(f"{spec!r} is a graph; use the graph command")
    return parse_ideal(src).ideal


def load_graph(args) -> graphs.SimpleGraph:
    if args.cycle is not None:
        return graphs.cycle(args.cycle)
    if args.path is not None:
        return graphs.path(args.path)
    if len(args.input) != 1:
        raise UsageError("graph commands need --cycle, --path, or exactly one -i")
    src = _read_source(args.input[0])
    if isinstance(src, Fixture):
        return src.graph()
    return parse_graph(src)


def _ideals(args, count: int | None = None) -> list[MonomialIdeal]:
    if not args.input:
        raise UsageError("no input given (use -i)")
    if count is not None and len(args.input) != count:
        raise UsageError(f"{args.command} takes exactly {count} input(s)")
    return [load_ideal(s) for s in args.input]


def _one(args) -> MonomialIdeal:
    return _ideals(args, 1)[0]


def _names(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _pairs(text: str) -> dict[str, str]:
    out = {}
    for item in _names(text):
        if "=" not in item:
            raise UsageError(f"expected name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


# ---- json encodings -----------------------------------------------------


def prime_json(p: MonomialPrime) -> list[str]:
    return list(p.vars)


def ideal_json(I: MonomialIdeal) -> dict[str, Any]:
    return {"ring": list(I.ring.vars), "generators": [str(g) for g in I.generators]}


def report_json(rep: properties.PropertyReport) -> dict[str, Any]:
    out: dict[str, Any] = {"property": rep.property, "verdict": rep.verdict, "bound": rep.bound}
    v = rep.first_violation
    if v is not None:
        out["power"] = v.power
        out["witness"] = prime_json(v.witness) if isinstance(v.witness, MonomialPrime) else str(v.witness)
        if v.offending:
            out["offending"] = [prime_json(p) for p in v.offending]
    for key, val in rep.auxiliary.items():
        if isinstance(val, MonomialPrime):
            val = prime_json(val)
        elif isinstance(val, tuple) and all(isinstance(p, MonomialPrime) for p in val):
            val = [prime_json(p) for p in val]
        out[key] = val
    return out


# ---- text rendering -----------------------------------------------------


def _fmt(val) -> str:
    if isinstance(val, dict) and "generators" in val:
        return "(" + ", ".join(val["generators"]) + ")"
    if isinstance(val, dict) and "vertices" in val:
        return ",".join(val["vertices"]) + "; edges (" + ", ".join(f"{a}-{b}" for a, b in val["edges"]) + ")"
    if isinstance(val, dict):
        return ", ".join(f"{k}={v}" for k, v in val.items())
    if isinstance(val, list) and val and all(isinstance(p, list) and all(isinstance(v, str) for v in p) for p in val):
        return "{" + ", ".join("(" + ", ".join(p) + ")" for p in val) + "}"
    if isinstance(val, list) and val and all(isinstance(v, str) for v in val):
        return "(" + ", ".join(val) + ")"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if val is None:
        return "-"
    return str(val)


def emit(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    lines = []
    for key, val in payload.items():
        if key == "sequence":
            for k, primes in enumerate(val, 1):
                lines.append(f"Ass(I^{k}): {_fmt(primes)}")
        elif isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            lines.append(f"{key}:")
            for item in val:
                if "generators" in item:
                    lines.append("  " + _fmt(item))
                    continue
                lines.append("  " + "; ".join(f"{k}={_fmt(v)}" for k, v in item.items()))
        else:
            lines.append(f"{key}: {_fmt(val)}")
    return "\n".join(lines)


# ---- commands -----------------------------------------------------------


def cmd_ass(args):
    I = _one(args)
    if args.sequence:
        seq = properties.ass_sequence(I, args.max_power, args.method)
        return {"ideal": ideal_json(I), "sequence": [[prime_json(p) for p in A] for A in seq.per_power]}, 0
    P = power(I, args.power)
    ass = decompose.associated_primes(P, args.method)
    out = {"ideal": ideal_json(I), "power": args.power, "ass": [prime_json(p) for p in ass]}
    code = 0
    if args.oracle:
        wit = decompose.ass_witnesses(P, args.budget or decompose.ORACLE_BUDGET)
        agree = tuple(wit) == ass
        out["oracle_agrees"] = agree
        out["witnesses"] = [{"prime": prime_json(p), "monomial": str(f)} for p, f in wit.items()]
        code = 0 if agree else 1
    return out, code


def cmd_decompose(args):
    I = _one(args)
    if args.primary:
        comps = decompose.primary_decomposition(I, args.method)
        out = {"ideal": ideal_json(I), "primary": [
            {"component": ideal_json(c.ideal), "radical": prime_json(c.radical)} for c in comps]}
        pieces = [c.ideal for c in comps]
    else:
        comps = decompose.irreducible_decomposition(I, args.method)
        out = {"ideal": ideal_json(I), "irreducible": [ideal_json(c.ideal()) for c in comps]}
        pieces = [c.ideal() for c in comps]
    code = 0
    if args.oracle:
        other = "incremental" if args.method == "split" else "split"
        same = [c.exps for c in decompose.irreducible_decomposition(I, other)] == [
            c.exps for c in decompose.irreducible_decomposition(I, args.method)]
        rebuilt = intersect(*pieces) == I
        out["oracle_agrees"] = same and rebuilt
        code = 0 if same and rebuilt else 1
    return out, code


def cmd_min(args):
    I = _one(args)
    return {"ideal": ideal_json(I), "min": [prime_json(p) for p in decompose.minimal_primes(I, args.method)]}, 0


def cmd_power(args):
    I = _one(args)
    return {"ideal": ideal_json(I), "power": args.k, "result": ideal_json(power(I, args.k))}, 0


def cmd_intersect(args):
    Is = _ideals(args)
    if len(Is) < 2:
        raise UsageError("intersect needs at least two inputs")
    return {"result": ideal_json(intersect(*Is))}, 0


def cmd_colon(args):
    if args.by is not None:
        I = _one(args)
        J = Monomial(I.ring, parse_monomial_exps(args.by, I.ring))
    else:
        I, J = _ideals(args, 2)
    return {"result": ideal_json(colon(I, J))}, 0


def cmd_radical(args):
    return {"result": ideal_json(radical(_one(args)))}, 0


def cmd_closure(args):
    I = _one(args)
    budget = args.budget or closure.CLOSURE_BUDGET
    if args.point is not None:
        a = parse_monomial_exps(args.point, I.ring)
        member = closure.in_closure(I, a)
        out = {"ideal": ideal_json(I), "point": str(Monomial(I.ring, a)), "in_closure": member}
        code = 0
        if args.oracle:
            agree = closure.closure_power_oracle(I, a) == member
            out["oracle_agrees"] = agree
            code = 0 if agree else 1
        return out, code
    C = closure.integral_closure(I, budget)
    out = {"ideal": ideal_json(I), "closure": ideal_json(C), "integrally_closed": C == I}
    code = 0
    if args.oracle:
        agree = all(closure.closure_power_oracle(I, g) for g in C.generators)
        out["oracle_agrees"] = agree
        code = 0 if agree else 1
    return out, code


def cmd_normal(args):
    I = _one(args)
    res = closure.is_normal(I, args.budget or closure.CLOSURE_BUDGET)
    out = {"ideal": ideal_json(I), "normal": res.normal, "checked_powers": res.checked}
    if not res.normal:
        out["failing_power"] = res.failing_power
        out["witness"] = str(res.witness)
    return out, 0 if res.normal else 1


def _transform(args, result: MonomialIdeal, **extra):
    out = {"result": ideal_json(result)}
    out.update(extra)
    return out, 0


def cmd_expand(args):
    I = _one(args)
    return _transform(args, transforms.expand(I, [int(t) for t in _names(args.tuple)]))


def cmd_weight(args):
    I = _one(args)
    if "=" in args.weights:
        w = {k: int(v) for k, v in _pairs(args.weights).items()}
    else:
        w = [int(t) for t in _names(args.weights)]
    return _transform(args, transforms.weight(I, w))


def cmd_polarize(args):
    return _transform(args, transforms.polarize(_one(args)))


def cmd_depolarize(args):
    I = _one(args)
    base = Ring(tuple(_names(args.base))) if args.base else None
    shadows = _pairs(args.shadows) if args.shadows else None
    return _transform(args, transforms.depolarize(I, base, shadows))


def cmd_localize(args):
    I = _one(args)
    J = transforms.localize(I, _names(args.prime))
    return _transform(args, J, unit=J.is_unit())


def cmd_contract(args):
    return _transform(args, transforms.contract(_one(args), args.var))


def cmd_delete(args):
    J = transforms.delete(_one(args), args.var)
    return _transform(args, J, zero=J.is_zero())


def cmd_permute(args):
    return _transform(args, transforms.permute(_one(args), _pairs(args.perm)))


def cmd_scale(args):
    I = _one(args)
    h = Monomial(I.ring, parse_monomial_exps(args.by, I.ring))
    return _transform(args, transforms.scale_by_monomial(I, h))


def cmd_check(args):
    I = _one(args)
    rep = run_check(args.property, I, args.max_power, t_max=args.t_max)
    return report_json(rep), 0 if rep.holds else 1


def _cycles(cs) -> list[list[str]]:
    return [list(c) for c in cs]


def cmd_graph(args):
    G = load_graph(args)
    op = args.op
    out: dict[str, Any] = {"graph": {"vertices": list(G.vertices), "edges": [list(e) for e in G.edge_list()]}}
    if op == "edge-ideal":
        out["result"] = ideal_json(graphs.edge_ideal(G))
    elif op == "cover-ideal":
        J = graphs.cover_ideal(G)
        out["result"] = ideal_json(J)
        if args.oracle:
            covers = graphs.minimal_vertex_covers(G)
            gens = sorted(tuple(g.support()) for g in J.generators)
            agree = gens == sorted(covers)
            out["oracle_agrees"] = agree
            return out, 0 if agree else 1
    elif op == "covers":
        out["covers"] = [list(c) for c in graphs.minimal_vertex_covers(G)]
    elif op == "bipartite":
        res = graphs.is_bipartite(G)
        out["bipartite"] = res.bipartite
        if res.bipartite:
            out["coloring"] = {v: res.coloring[v] for v in G.vertices}
        else:
            out["odd_cycle"] = list(res.odd_cycle)
    elif op == "odd-cycles":
        out["odd_cycles"] = _cycles(graphs.induced_odd_cycles(G, args.max_size, args.budget or graphs.GRAPH_BUDGET))
    elif op == "almost-bipartite":
        res = graphs.is_almost_bipartite(G, args.budget or graphs.GRAPH_BUDGET)
        out["almost_bipartite"] = res.almost_bipartite
        out["odd_cycles"] = _cycles(res.odd_cycles)
        if res.note:
            out["note"] = res.note
    elif op == "hochster":
        confs = graphs.hochster_configurations(G, args.order, args.budget or graphs.GRAPH_BUDGET)
        out["configurations"] = [{"order": k, "cycles": [list(c1), list(c2)]} for k, c1, c2 in confs]
    return out, 0


def cmd_fixtures(args):
    if args.action == "list":
        return {"fixtures": [{"id": f.id, "provenance": f.provenance} for f in CORPUS]}, 0
    if args.action == "show":
        if len(args.ids) != 1:
            raise UsageError("fixtures show takes one id")
        return BY_ID[args.ids[0]].to_dict(), 0
    if args.action == "export":
        if len(args.ids) != 1:
            raise UsageError("fixtures export takes one directory")
        os.makedirs(args.ids[0], exist_ok=True)
        for f in CORPUS:
            with open(os.path.join(args.ids[0], f"{f.id}.json"), "w") as fh:
                json.dump(f.to_dict(), fh, sort_keys=True, indent=1)
                fh.write("\n")
        return {"exported": len(CORPUS), "directory": args.ids[0]}, 0
    # verify
    chosen = [BY_ID[i] for i in args.ids] if args.ids else [f for f in CORPUS if args.slow or not f.slow]
    rows = []
    failed = 0
    for f in chosen:
        for r in verify(f):
            failed += not r.ok
            rows.append({"fixture": f.id, "kind": r.expectation["kind"], "ok": r.ok, "detail": r.detail})
    return {"results": rows, "failed": failed}, 0 if failed == 0 else 1


COMMANDS = {
    "ass": cmd_ass,
    "decompose": cmd_decompose,
    "min": cmd_min,
    "power": cmd_power,
    "intersect": cmd_intersect,
    "colon": cmd_colon,
    "radical": cmd_radical,
    "closure": cmd_closure,
    "normal": cmd_normal,
    "expand": cmd_expand,
    "weight": cmd_weight,
    "polarize": cmd_polarize,
    "depolarize": cmd_depolarize,
    "localize": cmd_localize,
    "contract": cmd_contract,
    "delete": cmd_delete,
    "permute": cmd_permute,
    "scale": cmd_scale,
    "check": cmd_check,
    "graph": cmd_graph,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", action="append", default=[],
                        help="fixture id, file, inline expression, or - for stdin (repeatable)")
    common.add_argument("--max-power", type=int, default=4, help="bound N for power-indexed checks")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, default=None, help="enumeration budget for oracles")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    common.add_argument("--method", choices=("split", "incremental"), default="split",
                        help="decomposition route")

    ap = argparse.ArgumentParser(prog="copersist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    p = add("ass", "associated primes of I^k")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--sequence", action="store_true", help="Ass(I^k) for k = 1..max-power")
    p = add("decompose", "irreducible (or primary) decomposition")
    p.add_argument("--primary", action="store_true")
    add("min", "minimal primes")
    p = add("power", "I^k")
    p.add_argument("-k", type=int, required=True)
    add("intersect", "intersection of the inputs")
    p = add("colon", "I : J, or I : monomial with --by")
    p.add_argument("--by", default=None)
    add("radical", "radical")
    p = add("closure", "integral closure, or membership of --point")
    p.add_argument("--point", default=None)
    add("normal", "normality test")
    p = add("expand", "expansion by a tuple")
    p.add_argument("--tuple", required=True, help="e.g. 3,1,2")
    p = add("weight", "weighted ideal")
    p.add_argument("--weights", required=True, help="e.g. 3,2,1 or x=3,y=2,z=1")
    add("polarize", "polarization")
    p = add("depolarize", "undo polarization")
    p.add_argument("--base", default=None, help="base ring variables, comma separated")
    p.add_argument("--shadows", default=None, help="shadow=base pairs; default strips _k suffixes")
    p = add("localize", "monomial localization at a prime")
    p.add_argument("--prime", required=True, help="variables of the prime, comma separated")
    p = add("contract", "set a variable to 1")
    p.add_argument("--var", required=True)
    p = add("delete", "set a variable to 0")
    p.add_argument("--var", required=True)
    p = add("permute", "relabel variables of a squarefree ideal")
    p.add_argument("--perm", required=True, help="e.g. x1=x2,x2=x1")
    p = add("scale", "multiply by a monomial")
    p.add_argument("--by", required=True)
    p = add("check", "bounded property check")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("--t-max", type=int, default=2, help="prime budget for the generalized check")
    p = add("graph", "graph operations")
    p.add_argument("op", choices=GRAPH_OPS)
    p.add_argument("--cycle", type=int, default=None)
    p.add_argument("--path", type=int, default=None)
    p.add_argument("--order", type=int, default=None, help="Hochster configuration order k")
    p.add_argument("--max-size", type=int, default=None)
    p = add("fixtures", "embedded example corpus")
    p.add_argument("action", choices=("list", "show", "export", "verify"))
    p.add_argument("ids", nargs="*")
    p.add_argument("--slow", action="store_true", help="include slow fixtures in verify")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        payload, code = COMMANDS[args.command](args)
    except (UsageError, ParseError, ValueError, KeyError, BudgetExceededError, ArithmeticError,
            properties.AssComputationError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"copersist: error: {msg}", file=sys.stderr)
        return 2
    print(emit(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
