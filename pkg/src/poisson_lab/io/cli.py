"""Command-line front end (``poisson-lab`` / ``python -m poisson_lab``).

``--structure`` takes a structure file path or ``gallery:<name>``.
Every subcommand prints line-oriented text; ``--machine`` switches to a
single JSON document with exact scalars as strings.

Exit status: 0 on success, 1 when the computed answer is negative
(Jacobi fails, not log-canonical, no canonical pair, no witness), 2 on
usage or input errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from ..algebra.rational import RationalFunction
from ..errors import NoCanonicalPair, NotApplicableError, NotLogCanonicalError, PoissonLabError
from ..lie import abelian_verdict, ad_analysis, canonical_pair, lie_closure, witness_transform
from ..poisson import bracket, check_log_canonical, jacobiator, structure_validate
from ..series import SeriesWindow, coefficient, constant_term, expand_iterated
from .expr import format_expr, parse_expr
from .gallery import gallery
from .structfile import load_structure, structure_to_dict


def _scalar(c):
    c = Fraction(c)
    return str(c)


def _names_list(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _structure(args):
    source = args.structure
    if source.startswith("gallery:"):
        return gallery(source[len("gallery:"):]).structure
    return load_structure(source, skip_jacobi=args.skip_jacobi)


def _order(args, variables):
    if not getattr(args, "order", None):
        return None
    names = _names_list(args.order)
    if sorted(names) != sorted(variables):
        raise ValueError(f"--order must list each of {', '.join(variables)} once")
    return tuple(variables.index(v) for v in names)


def _emit(args, text_lines, machine):
    if args.machine:
        print(json.dumps(machine, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_bracket(args):
    S = _structure(args)
    f, g = S.parse(args.e1), S.parse(args.e2)
    h = bracket(S, f, g)
    perm = _order(args, list(S.variables))
    if perm is None:
        text = S.format(h)
    else:
        # same function, printed with the requested variable precedence
        text = format_expr(h.permute(perm), [S.variables[k] for k in perm])
    _emit(args, [text], {"bracket": text})
    return 0


def cmd_jacobi(args):
    S = _structure(args)
    if args.exprs:
        if len(args.exprs) != 3:
            raise ValueError("jacobi takes zero or three expressions")
        f, g, h = (S.parse(e) for e in args.exprs)
        text = S.format(jacobiator(S, f, g, h))
        _emit(args, [text], {"jacobiator": text})
        return 0 if text == "0" else 1
    report = structure_validate(S)
    names = S.variables
    failures = [
        {"triple": [names[i], names[j], names[k]], "jacobiator": S.format(J)}
        for (i, j, k), J in report.failures
    ]
    _emit(args, str(report).splitlines(), {"valid": report.valid, "failures": failures})
    return 0 if report.valid else 1


def cmd_constant_term(args):
    S = _structure(args)
    h = bracket(S, S.parse(args.e1), S.parse(args.e2))
    c = constant_term(h, _order(args, list(S.variables)))
    _emit(args, [_scalar(c)], {"constant_term": _scalar(c), "bracket": S.format(h)})
    return 0


def cmd_coeff(args):
    S = _structure(args)
    index = tuple(int(t) for t in args.index.split(","))
    c = coefficient(S.parse(args.expr), index, _order(args, list(S.variables)))
    _emit(args, [_scalar(c)], {"coefficient": _scalar(c), "index": list(index)})
    return 0


def _window(text, variables):
    bounds = {}
    for part in text.split(","):
        name, _, rng = part.partition(":")
        name = name.strip()
        lo, sep, hi = rng.partition("..")
        if name not in variables or not sep:
            raise ValueError(f"bad window item {part!r}; expected name:lo..hi")
        bounds[name] = (int(lo), int(hi))
    missing = [v for v in variables if v not in bounds]
    if missing:
        raise ValueError(f"window is missing {', '.join(missing)}")
    return SeriesWindow([bounds[v] for v in variables])


def cmd_expand(args):
    variables = _names_list(args.vars)
    f = parse_expr(args.expr, variables)
    window = _window(args.window, variables)
    series = expand_iterated(f, window, _order(args, variables))
    terms = [
        (format_expr(RationalFunction.monomial(e, c), variables), e, c) for e, c in series.items()
    ]
    _emit(
        args,
        [t for t, _, _ in terms],
        {"terms": [{"exponents": list(e), "coefficient": _scalar(c)} for _, e, c in terms]},
    )
    return 0


def cmd_closure(args):
    S = _structure(args)
    gens = [S.parse(e) for e in args.exprs]
    report = lie_closure(S, gens, args.max_dim)
    basis = [S.format(b) for b in report.basis]
    lines = [f"closed: {report.closed}", f"dimension: {report.dimension}"]
    lines += [f"  b{k} = {b}" for k, b in enumerate(basis)]
    machine = {"closed": report.closed, "dimension": report.dimension, "basis": basis}
    if report.closed:
        verdict = abelian_verdict(S, report)
        lines.append(f"abelian: {report.abelian}")
        relations = []
        for i in range(report.dimension):
            for j in range(i + 1, report.dimension):
                exp = report.structure_constants[i][j]
                if any(exp):
                    rel = f"{{b{i},b{j}}} = {S.format(report.expansion(i, j))}"
                    relations.append(rel)
                    lines.append("  " + rel)
        for i in range(report.dimension):
            ad = ad_analysis(report, i)
            if not ad.is_zero:
                lines.append(
                    f"  ad_b{i}: charpoly {[_scalar(c) for c in ad.charpoly]}, "
                    f"nilpotent {ad.is_nilpotent}, rational eigenvalues "
                    f"{[_scalar(r) for r in ad.rational_eigenvalues]}"
                )
        lines.append(f"verdict: {verdict}")
        machine.update(
            abelian=report.abelian,
            relations=relations,
            structure_constants=[
                [[_scalar(c) for c in row] for row in plane] for plane in report.structure_constants
            ],
            verdict=verdict.kind,
        )
    else:
        lines.append(f"inconclusive: budget {args.max_dim} exhausted")
    _emit(args, lines, machine)
    return 0


def cmd_check_log_canonical(args):
    S = _structure(args)
    gs = [S.parse(e) for e in args.exprs]
    try:
        omega = check_log_canonical(S, gs)
    except NotLogCanonicalError as exc:
        i, j = exc.pair
        ratio = S.format(exc.ratio)
        _emit(
            args,
            [f"not log-canonical: {{g{i + 1},g{j + 1}}}/(g{i + 1}*g{j + 1}) = {ratio}"],
            {"log_canonical": False, "pair": [i, j], "ratio": ratio},
        )
        return 1
    rows = [[_scalar(v) for v in row] for row in omega.rows]
    _emit(args, [" ".join(row) for row in rows], {"log_canonical": True, "omega": rows})
    return 0


def cmd_canonical_pair(args):
    try:
        pair = canonical_pair(args.a, args.b, unit=args.unit)
    except NoCanonicalPair as exc:
        _emit(args, [f"no canonical pair: {exc}"], {"exists": False})
        return 1
    S = pair.structure
    u, v = S.format(pair.u), S.format(pair.v)
    c = _scalar(pair.constant)
    _emit(args, [f"u = {u}", f"v = {v}", f"{{u,v}} = {c}"], {"exists": True, "u": u, "v": v, "constant": c})
    return 0


def cmd_witness(args):
    S = _structure(args)
    try:
        res = witness_transform(S, S.parse(args.e1), S.parse(args.e2))
    except NotApplicableError as exc:
        _emit(args, ["not applicable:"] + [f"  {f}" for f in exc.failed], {"applicable": False, "failed": exc.failed})
        return 1
    f, g = (S.format(p) for p in res.pair)
    b = S.format(res.bracket)
    _emit(
        args,
        [f"hypothesis ({res.hypothesis}): {res.note}", f"f = {f}", f"g = {g}", f"{{f,g}} = {b}"],
        {"applicable": True, "hypothesis": res.hypothesis, "f": f, "g": g, "bracket": b},
    )
    return 0


def cmd_gallery(args):
    entry = gallery(args.name)
    lines = [f"{entry.name}: {', '.join(entry.structure.variables)}"] + list(entry.lines())
    machine = {
        "name": entry.name,
        "structure": structure_to_dict(entry.structure),
        "identities": [{"check": str(i), "passed": i.passed} for i in entry.identities],
        "checks": [{"check": label, "passed": ok} for label, ok in entry.checks],
    }
    _emit(args, lines, machine)
    return 0 if entry.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="poisson-lab", description="Exact Poisson bracket workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, structure=True, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--machine", action="store_true", help="emit JSON")
        if structure:
            p.add_argument("--structure", required=True, help="structure file or gallery:<name>")
            p.add_argument("--skip-jacobi", action="store_true", help="do not validate Jacobi on load")
        return p

    p = add("bracket", cmd_bracket, help="print {E1, E2}")
    p.add_argument("--order", help="variable precedence for printing, e.g. z,y,x")
    p.add_argument("e1")
    p.add_argument("e2")

    p = add("jacobi", cmd_jacobi, help="jacobiator of three expressions, or validate the structure")
    p.add_argument("exprs", nargs="*")

    p = add("constant-term", cmd_constant_term, help="constant term of {E1, E2}")
    p.add_argument("--order", help="adjunction order, innermost first (default: declaration order)")
    p.add_argument("e1")
    p.add_argument("e2")

    p = add("coeff", cmd_coeff, help="coefficient of x^I in E")
    p.add_argument("--index", required=True, help="comma-separated exponents, e.g. -1,0")
    p.add_argument("--order", help="adjunction order, innermost first")
    p.add_argument("expr")

    p = add("expand", cmd_expand, structure=False, help="windowed iterated Laurent expansion")
    p.add_argument("--vars", required=True)
    p.add_argument("--order", help="adjunction order, innermost first")
    p.add_argument("--window", required=True, help='e.g. "x:-4..0,y:0..3"')
    p.add_argument("expr")

    p = add("closure", cmd_closure, help="Lie closure of span{1, E1, ...}")
    p.add_argument("--max-dim", type=int, default=16)
    p.add_argument("exprs", nargs="+")

    p = add("check-log-canonical", cmd_check_log_canonical, help="test {g_i,g_j} = w_ij g_i g_j")
    p.add_argument("exprs", nargs="+")

    p = add("canonical-pair", cmd_canonical_pair, structure=False, help="pair for {x,y} = x^A y^B")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--unit", action="store_true", help="rescale so that {u,v} = 1")

    p = add("witness", cmd_witness, help="apply the bracket-1 / eigen / nilpotent transforms")
    p.add_argument("e1")
    p.add_argument("e2")

    p = add("gallery", cmd_gallery, structure=False, help="build and verify a named example")
    p.add_argument("name")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PoissonLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
