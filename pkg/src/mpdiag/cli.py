"""Command-line front end: mpdiag <verb> ...

Exit codes: 0 on success, 1 on a domain error (including size bounds),
2 on a usage error such as malformed diagram text.
"""

import argparse
import json
import random
import sys
import time

from . import msp_algebra as mp
from . import partition_algebra as pa
from . import tableaux as tb
from .partitions import (BoundError, MultisetPartition, ParseError, SetPartition,
                         _parse, enumerate_msp, enumerate_set_partitions)
from .scalars import format_rational


class UsageError(Exception):
    pass


def _parse_diagram(text, algebra, r, k):
    try:
        if algebra == "P":
            return SetPartition.parse(text, r=r)
        return MultisetPartition.parse(text, r=r, k=k)
    except ParseError:
        raise
    except ValueError as e:
        raise UsageError(f"cannot read {text!r}: {e}") from e


def _parse_element(text, algebra, basis, r, k):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            data = json.load(fh)
        e = (pa.PAElement if data.get("algebra") == "P" else mp.MPElement).from_json(data)
        return e
    p = _parse_diagram(text, algebra, r, k)
    if algebra == "P":
        return pa.PAElement.basis_element(basis, p)
    return mp.MPElement.basis_element(basis, p)


def _emit(out, args, text, data):
    if args.json:
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _check_basis(algebra, basis):
    allowed = ("L", "T") if algebra == "P" else mp.BASES
    if basis not in allowed:
        raise UsageError(f"basis {basis} is not available for algebra {algebra}")


# ---------------------------------------------------------------- verbs

def cmd_multiply(args, out):
    _check_basis(args.algebra, args.basis)
    elems = [_parse_element(t, args.algebra, args.basis, args.r, args.k) for t in args.elements]
    if len(elems) < 2:
        raise UsageError("multiply needs at least two elements")
    result = elems[0]
    for e in elems[1:]:
        result = result * e
    _emit(out, args, str(result), result.to_json())


def cmd_convert(args, out):
    _check_basis(args.algebra, args.source)
    _check_basis(args.algebra, args.to)
    e = _parse_element(args.element, args.algebra, args.source, args.r, args.k)
    if args.algebra == "P":
        if args.source == args.to:
            res = e
        elif args.to == "T":
            res = pa.diagram_to_orbit(e)
        else:
            res = pa.orbit_to_diagram(e)
    else:
        res = mp.convert(e, args.to)
    _emit(out, args, str(res), res.to_json())


def dimension_table(r, k, n):
    rows = []
    for lam in tb.shapes(n, r):
        d = len(tb.enumerate_SSMPT(lam, r, k))
        if d:
            rows.append((lam, d))
    return rows


def cmd_dims(args, out):
    r, k = args.r, args.k
    n = args.n if args.n is not None else 2 * r
    total = len(enumerate_msp(r, k))
    rows = dimension_table(r, k, n)
    squares = sum(d * d for _, d in rows)
    if args.json:
        _emit(out, args, "", {"r": r, "k": k, "n": n, "algebra_dimension": total,
                              "modules": [{"shape": list(lam), "dimension": d} for lam, d in rows],
                              "sum_of_squares": squares})
        return
    width = max([len(str(lam)) for lam, _ in rows] + [5])
    lines = [f"r={r} k={k} n={n}", f"{'shape':<{width}}  dim"]
    lines += [f"{str(lam):<{width}}  {d}" for lam, d in rows]
    lines.append(f"{'sum of squares':<{width}}  {squares}")
    lines.append(f"{'algebra dimension':<{width}}  {total}")
    out.write("\n".join(lines) + "\n")


def cmd_enumerate(args, out):
    r, k = args.r, args.k
    if args.what == "sp":
        items = [str(p) for p in enumerate_set_partitions(r)]
    elif args.what == "msp":
        items = [str(p) for p in enumerate_msp(r, k)]
    else:
        if not args.shape:
            raise UsageError("--shape is required for tableaux")
        shape = tuple(int(s) for s in args.shape.split(","))
        if args.what == "sspt":
            items = [str(t) for t in tb.enumerate_SSPT(shape, r)]
        else:
            items = [str(t) for t in tb.enumerate_SSMPT(shape, r, k)]
    _emit(out, args, "\n".join(items) + f"\n# {len(items)} items", {"items": items})


def _format_vector(vec):
    if not vec:
        return "0"
    return " + ".join(f"{format_rational(c)} * {t}" for t, c in sorted(vec.items()))


def cmd_act(args, out):
    try:
        t = tb.Tableau.parse(args.tableau)
    except ValueError as e:
        raise UsageError(f"cannot read tableau: {e}") from e
    n = args.n if args.n is not None else t.n
    if args.algebra == "P":
        pi = _parse_diagram(args.diagram, "P", args.r, None)
        vec = tb.apply_diagram(pi, tb.straighten(t), n)
        result = vec
    else:
        p = _parse_diagram(args.diagram, "MP", args.r, args.k)
        basis = tb.mp_basis(t.shape, p.r, p.k)
        vec = tb.act_on_w(p, t, n)
        targets = [s for s in basis if tb.tableau_composition(s, p.k) == p.top_composition()]
        from .linalg import solve
        coeffs = solve([tb.w_vector(s, tb.tableau_composition(s, p.k)) for s in targets], vec)
        if coeffs is None:
            raise ValueError("the image is not in the span of the semistandard w vectors")
        result = {s: c for s, c in zip(targets, coeffs) if c}
    _emit(out, args, _format_vector(result),
          {"terms": [{"tableau": str(s), "coeff": str(c)} for s, c in sorted(result.items())]})


def cmd_factor(args, out):
    p = _parse_diagram(args.diagram, "MP", args.r, args.k)
    blocks = _parse(args.block, "[", "]")
    if len(blocks) != 1:
        raise UsageError("--block must hold exactly one block")
    blk = tuple(sorted(blocks[0]))
    f = mp.factor_at_block(p, blk)
    coeff, ok = mp.factorization_check(p, blk)
    order = "quotient * restricted" if f.mirrored else "restricted * quotient"
    text = (f"restricted: {f.restricted}\nquotient:   {f.quotient}\norder: {order}\n"
            f"coefficient of the diagram: {coeff}\nremaining terms smaller: {ok}")
    _emit(out, args, text, {"restricted": str(f.restricted), "quotient": str(f.quotient),
                            "mirrored": f.mirrored, "coefficient": coeff.to_json(),
                            "remaining_smaller": ok})


# ---------------------------------------------------------------- verify suites

def _suite_change_of_basis(r, k, rng, samples):
    basis = enumerate_msp(r, k)
    pairs = [(p, q) for p in basis for q in basis]
    if samples and len(pairs) > samples:
        pairs = rng.sample(pairs, samples)
    bad = 0
    for p, q in pairs:
        lhs = mp.O_to_X(mp.olike_product(p, q))
        rhs = mp.omega(p) * mp.omega(q) * mp.oz_orbit_product(p, q)
        bad += lhs != rhs
    return bad == 0, f"{len(pairs)} pairs, {bad} failures"


def composable_triple(basis, rng):
    """Random p, q, s whose colour compositions line up, so products are nonzero in general."""
    by_top = {}
    for x in basis:
        by_top.setdefault(x.top_composition(), []).append(x)
    p = rng.choice(basis)
    q = rng.choice(by_top[p.bottom_composition()])
    s = rng.choice(by_top[q.bottom_composition()])
    return p, q, s


def _suite_associativity(r, k, rng, samples):
    basis = enumerate_msp(r, k)
    n = samples or 200
    bad = 0
    for _ in range(n):
        p, q, s = composable_triple(basis, rng)
        for b in mp.BASES:
            e = [mp.MPElement.basis_element(b, x) for x in (p, q, s)]
            bad += (e[0] * e[1]) * e[2] != e[0] * (e[1] * e[2])
    return bad == 0, f"{n} triples in 3 bases, {bad} failures"


def _suite_dimension(r, k, rng, samples):
    total = len(enumerate_msp(r, k))
    squares = sum(d * d for _, d in dimension_table(r, k, 2 * r))
    return total == squares, f"|basis| = {total}, sum of squares = {squares}"


def _suite_generators(r, k, rng, samples):
    dim = mp.span_closure(mp.generating_set(r, k), r, k)
    total = len(enumerate_msp(r, k))
    return dim == total, f"closure dimension {dim} of {total}"


def _suite_snapshot(r, k, rng, samples):
    basis = enumerate_msp(r, k)
    pairs = [(p, q) for p in basis for q in basis if p.bottom_composition() == q.top_composition()]
    if samples and len(pairs) > samples:
        pairs = rng.sample(pairs, samples)
    bad = sum(not mp.snapshot_independence_check(p, q) for p, q in pairs)
    return bad == 0, f"{len(pairs)} pairs, {bad} failures"


def _suite_realization(r, k, rng, samples, n=None):
    from . import realization as rz
    n = n or 2 * r + 1
    basis = enumerate_msp(r, k)
    mats = {p: rz.mp_matrix(p, n) for p in basis}
    indep = rz.linearly_independent(list(mats.values()))
    central = all(rz.centralizer_check(M, n, r, k) for M in mats.values())
    cdim = rz.centralizer_dimension(n, r, k)
    ok = indep and central and cdim == len(basis)
    return ok, f"n={n}: independent={indep}, commuting={central}, commutant dim {cdim} of {len(basis)}"


SUITES = {
    "change-of-basis": _suite_change_of_basis,
    "associativity": _suite_associativity,
    "dimension": _suite_dimension,
    "generators": _suite_generators,
    "snapshot": _suite_snapshot,
    "realization": _suite_realization,
}


def cmd_verify(args, out):
    rng = random.Random(args.seed)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    results = []
    for name in names:
        start = time.perf_counter()
        ok, detail = SUITES[name](args.r, args.k, rng, args.samples)
        elapsed = time.perf_counter() - start
        all_ok &= ok
        results.append({"suite": name, "pass": ok, "detail": detail})
        if not args.json:
            out.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail} ({elapsed:.1f}s)\n")
    if args.json:
        _emit(out, args, "", {"results": results, "pass": all_ok})
    return 0 if all_ok else 1


# ---------------------------------------------------------------- entry point

def build_parser():
    parser = argparse.ArgumentParser(prog="mpdiag", description="Partition and multiset partition algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-r", type=int, default=None, help="number of vertices per row")
    common.add_argument("-k", type=int, default=None, help="number of colors")
    common.add_argument("-n", type=int, default=None, help="specialization of x")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="verb", required=True)

    m = sub.add_parser("multiply", parents=[common], help="multiply basis elements")
    m.add_argument("--algebra", choices=["P", "MP"], default="MP")
    m.add_argument("--basis", default="D")
    m.add_argument("elements", nargs="+")
    m.set_defaults(func=cmd_multiply)

    c = sub.add_parser("convert", parents=[common], help="change basis")
    c.add_argument("--algebra", choices=["P", "MP"], default="MP")
    c.add_argument("--from", dest="source", required=True)
    c.add_argument("--to", required=True)
    c.add_argument("element")
    c.set_defaults(func=cmd_convert)

    d = sub.add_parser("dims", parents=[common], help="module dimensions")
    d.set_defaults(func=cmd_dims)

    e = sub.add_parser("enumerate", parents=[common], help="list combinatorial objects")
    e.add_argument("what", choices=["sp", "msp", "sspt", "ssmpt"])
    e.add_argument("--shape", help="comma separated partition, e.g. 3,1")
    e.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("act", parents=[common], help="act by a diagram on a tableau")
    a.add_argument("--algebra", choices=["P", "MP"], default="P")
    a.add_argument("diagram")
    a.add_argument("tableau")
    a.set_defaults(func=cmd_act)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--samples", type=int, default=0, help="cap on sampled pairs (0 = all)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("factor", parents=[common], help="factor a diagram at a nonbasic block")
    f.add_argument("diagram")
    f.add_argument("--block", required=True)
    f.set_defaults(func=cmd_factor)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.verb in ("dims", "enumerate", "verify") and args.r is None:
        args.r = 2
    if args.k is None and args.verb in ("dims", "enumerate", "verify"):
        args.k = 2
    try:
        code = args.func(args, out)
    except (ParseError, UsageError) as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    except BoundError as e:
        sys.stderr.write(f"bound exceeded: {e}\n")
        return 1
    except (ValueError, ArithmeticError, KeyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
