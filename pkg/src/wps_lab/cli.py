"""``wps-lab`` command line front end.

Every command prints one JSON envelope ``{"command", "inputs", "results",
"decimal"}`` (or TSV with ``--format tsv``).  Rationals appear as exact
``"num/den"`` strings; ``decimal`` maps their paths to 6-place renderings.
Exit status: 0 success, 2 invalid input, 1 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curves, exact, hypersurface, orbifold, seifert, weights
from .errors import ConsistencyFailure, InputError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return exact.parse_rational(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _matrix(text: str) -> list[list[int]]:
    return [_int_list(row) for row in text.split(";")]


def _torsion(text: str) -> list[tuple[int, int, int]]:
    """``2^1:1,2^2:1`` -> [(2, 1, 1), (2, 2, 1)]."""
    out = []
    for item in filter(None, (x.strip() for x in text.split(","))):
        try:
            pp, count = item.split(":")
            p, i = pp.split("^")
            out.append((int(p), int(i), int(count)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"torsion entries look like p^i:count, got {item!r}")
    return out


def _iL(text: str):
    if text.lower() in ("inf", "infinity", "∞"):
        return orbifold.INF
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"i(L) must be an integer or 'inf', got {text!r}")


# -- serialization -----------------------------------------------------------

def _encode(obj, path, decimals):
    if isinstance(obj, Fraction):
        decimals[path] = exact.decimal_string(obj)
        return exact.format_rational(obj)
    if isinstance(obj, dict):
        return {k: _encode(v, f"{path}.{k}", decimals) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v, f"{path}[{i}]", decimals) for i, v in enumerate(obj)]
    if obj is orbifold.INF:
        return "inf"
    return obj


def envelope(command: str, inputs: dict, results) -> dict:
    decimals: dict[str, str] = {}
    body = _encode(results, "results", decimals)
    return {
        "command": command,
        "inputs": _encode(inputs, "inputs", {}),
        "results": body,
        "decimal": decimals,
    }


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else k)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    elif isinstance(obj, list):
        yield prefix, ",".join(str(v) for v in obj)
    else:
        yield prefix, "" if obj is None else str(obj).lower() if isinstance(obj, bool) else str(obj)


def render(env: dict, fmt: str) -> str:
    if fmt == "tsv":
        lines = [f"command\t{env['command']}"]
        lines += [f"{k}\t{v}" for k, v in _flatten(env["results"], "results")]
        return "\n".join(lines) + "\n"
    return json.dumps(env, indent=2, ensure_ascii=False) + "\n"


# -- command handlers ----------------------------------------------------------

def cmd_weights(args):
    ws = weights.solve_weights(args.a)
    rep = weights.check_reduced_conditions(ws)
    res = {**ws.as_dict(), "conditions": rep.as_dict()}
    if ws.n == 4:
        res["n4_coprime"] = weights.n4_coprimality_condition(ws.exponents)
    if not rep.ok:
        raise ConsistencyFailure("; ".join(rep.violations))
    return {"a": args.a}, res


def cmd_survey_density(args):
    mode = "sample" if args.sample else "exhaustive"
    res = weights.density_survey(
        args.n, args.lo, args.hi, mode, k=args.sample, seed=args.seed, jobs=args.jobs
    )
    inputs = {"n": args.n, "lo": args.lo, "hi": args.hi, "mode": mode}
    if args.sample:
        inputs.update(k=args.sample, seed=args.seed)
    return inputs, res.as_dict()


def _surface_results(ws, contracted):
    inv = hypersurface.hypersurface_invariants(ws)
    if inv.milnor_orlik != inv.link_middle_rank:
        raise ConsistencyFailure(
            f"Milnor-Orlik sum {inv.milnor_orlik} != closed form {inv.link_middle_rank}"
        )
    res = inv.as_dict()
    if contracted:
        res["contracted"] = hypersurface.contracted_surface(ws).as_dict()
    return res


def cmd_surface(args):
    ws = weights.solve_weights(args.a)
    return {"a": args.a, "contracted": args.contracted}, _surface_results(ws, args.contracted)


def cmd_betti(args):
    ws = weights.solve_weights(args.a)
    return {"a": args.a}, {"wstar": ws.wstar, "betti": hypersurface.homology_profile(ws)}


def cmd_curve_classify(args):
    if len(args.w) != 3:
        raise InputError("need exactly three weights")
    tag = curves.classify_qsrc(*args.w, args.d)
    return {"w": args.w, "d": args.d}, tag.as_dict()


def cmd_curve_genus(args):
    ws = weights.solve_weights(args.a)
    if ws.n != 3:
        raise InputError("curve genus needs exactly three exponents")
    lhs = curves.curve_adjunction_lhs(ws)
    rhs = ws.wstar - sum(Fraction(1, x) for x in ws.w)
    if lhs != rhs:
        raise ConsistencyFailure(f"adjunction identity fails: {lhs} != {rhs}")
    g = curves.genus_n3(ws)
    if curves.adjunction_value(g, ws.w) != lhs:
        raise ConsistencyFailure("genus disagrees with adjunction")
    return {"a": args.a}, {
        "weights": ws.as_dict(),
        "genus": g,
        "kodaira_degree": curves.kodaira_degree_n3(ws.exponents),
        "adjunction": lhs,
    }


def cmd_curve_adjunction(args):
    return {"g": args.g, "m": args.m}, {"value": curves.adjunction_value(args.g, args.m)}


def cmd_curve_excluded(args):
    rep = curves.verify_excluded_family(args.bound, jobs=args.jobs)
    return {"bound": args.bound}, rep.as_dict()


def cmd_lens_normalize(args):
    lens = seifert.LensSpace(args.p, args.q)
    return {"p": args.p, "q": args.q}, {**lens.normal_form().as_dict(), "orbit": lens.orbit()}


def cmd_lens_ball(args):
    return {"p": args.p, "q": args.q}, seifert.rational_ball_membership(args.p, args.q).as_dict()


def cmd_lens_from_conic(args):
    cl = seifert.lens_from_conic(args.a, args.b)
    res = cl.as_dict()
    ff = Fraction((args.a + args.b) ** 2, args.a * args.b)
    res["h1_order"] = seifert.seifert_h1_order((args.a, args.b), ff)
    res["ball"] = seifert.rational_ball_membership(cl.lens.p, cl.lens.q).as_dict()
    return {"a": args.a, "b": args.b}, res


def cmd_family_wahl(args):
    return {"u": args.u}, seifert.wahl_family(args.u).as_dict()


def cmd_family_milnor_quotient(args):
    fam = seifert.milnor_quotient_family(args.a, args.b, args.c)
    return {"abc": [args.a, args.b, args.c]}, fam.as_dict()


def cmd_seifert_h1(args):
    return {"mult": args.mult, "ff": args.ff}, {"h1_order": seifert.seifert_h1_order(args.mult, args.ff)}


def cmd_seifert_star(args):
    snf = seifert.star_presentation_h1(args.r)
    return {"r": args.r}, {
        "diag": snf.diag,
        "torsion": snf.torsion,
        "free_rank": snf.free_rank,
        "trivial": snf.is_trivial,
    }


def cmd_orbifold_bmy(args):
    data = orbifold.OrbifoldSurfaceData(args.euler, tuple(args.orders), args.c1sq)
    return {"euler": args.euler, "orders": args.orders, "c1sq": args.c1sq}, orbifold.bmy_check(data).as_dict()


def cmd_enumerate_tuples(args):
    res = orbifold.enumerate_defect_tuples(
        args.k, args.max, args.threshold, strict=args.strict, coprime=args.coprime
    )
    inputs = {"k": args.k, "max": args.max, "threshold": args.threshold,
              "strict": args.strict, "coprime": args.coprime}
    return inputs, res.as_dict()


def cmd_fivefold_circle_action(args):
    inv = orbifold.BardenInvariants(args.k, tuple(args.torsion), args.i)
    return {"k": args.k, "torsion": [list(t) for t in args.torsion], "i": args.i}, \
        orbifold.circle_action_exists(inv).as_dict()


def cmd_exact_gcd(args):
    g, s, t = exact.ext_gcd(args.a, args.b)
    return {"a": args.a, "b": args.b}, {"g": g, "s": s, "t": t}


def cmd_exact_factor(args):
    return {"n": args.n}, {"factors": [list(f) for f in exact.factorize(args.n)]}


def cmd_exact_snf(args):
    snf = exact.smith_normal_form(args.rows)
    return {"rows": args.rows}, {"diag": snf.diag, "rank": snf.rank, "free_rank": snf.free_rank}


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wps-lab", description="Exact invariants of cyclic weighted hypersurfaces, "
                "orbifold inequalities, and Seifert/lens-space arithmetic.")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(parent, name, func, help_):
        sp = parent.add_parser(name, help=help_, description=help_)
        sp.set_defaults(func=func)
        return sp

    def group(name, help_):
        g = sub.add_parser(name, help=help_, description=help_)
        return g.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    sp = leaf(sub, "weights", cmd_weights, "solve the cyclic weight system for exponents a")
    sp.add_argument("-a", type=_int_list, required=True)

    survey = group("survey", "surveys over exponent ranges")
    sp = leaf(survey, "density", cmd_survey_density, "fraction of tuples with wstar = 1")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--lo", type=int, default=2)
    sp.add_argument("--hi", type=int, required=True)
    sp.add_argument("--sample", type=int, metavar="K", help="draw K random tuples instead of all")
    sp.add_argument("--seed", type=int, help="required with --sample")
    sp.add_argument("--jobs", type=int, default=1)

    sp = leaf(sub, "surface", cmd_surface, "invariants of H(a_1..a_n)")
    sp.add_argument("-a", type=_int_list, required=True)
    sp.add_argument("--contracted", action="store_true", help="n = 4: data of the contracted surface S*")

    sp = leaf(sub, "betti", cmd_betti, "rational Betti numbers of H(a_1..a_n) (wstar = 1)")
    sp.add_argument("-a", type=_int_list, required=True)

    curve = group("curve", "curves in weighted projective planes")
    sp = leaf(curve, "classify", cmd_curve_classify, "family of a quasi-smooth rational curve")
    sp.add_argument("-w", type=_int_list, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp = leaf(curve, "genus", cmd_curve_genus, "genus and Kodaira degree for three exponents")
    sp.add_argument("-a", type=_int_list, required=True)
    sp = leaf(curve, "adjunction", cmd_curve_adjunction, "2g - 2 + sum(1 - 1/m_i)")
    sp.add_argument("-g", type=int, required=True)
    sp.add_argument("--mult", dest="m", type=_int_list, default=[])
    sp = leaf(curve, "excluded", cmd_curve_excluded, "search for solutions of (mu+1)(mv+1) = (m+1)w")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)

    lens = group("lens", "lens spaces")
    for name, func, help_ in (
        ("normalize", cmd_lens_normalize, "orbit-minimal representative of L(p, q)"),
        ("ball", cmd_lens_ball, "membership in the rational-ball series"),
    ):
        sp = leaf(lens, name, func, help_)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
    sp = leaf(lens, "from-conic", cmd_lens_from_conic, "lens space around (xy = z^(a+b)) in P(a, b, 1)")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    family = group("family", "explicit example families")
    sp = leaf(family, "wahl", cmd_family_wahl, "Wahl's (3,3,3,m) example for parameter u")
    sp.add_argument("u", type=int)
    sp = leaf(family, "milnor-quotient", cmd_family_milnor_quotient, "x^a y + y^b z + z^c x quotient")
    for name in ("a", "b", "c"):
        sp.add_argument(name, type=int)

    seif = group("seifert", "Seifert fibered spaces")
    sp = leaf(seif, "h1", cmd_seifert_h1, "|H_1| from multiplicities and (F.F)")
    sp.add_argument("--mult", type=_int_list, required=True)
    sp.add_argument("--ff", type=_rational, required=True)
    sp = leaf(seif, "star", cmd_seifert_star, "abelianization of <a_i : a_i^r_i, a_1...a_m>")
    sp.add_argument("-r", type=_int_list, required=True)

    orb = group("orbifold", "orbifold surfaces")
    sp = leaf(orb, "bmy", cmd_orbifold_bmy, "orbifold Euler characteristic and BMY-type checks")
    sp.add_argument("--euler", type=int, required=True)
    sp.add_argument("--orders", type=_int_list, default=[])
    sp.add_argument("--c1sq", type=_rational)

    enum_ = group("enumerate", "enumerations")
    sp = leaf(enum_, "tuples", cmd_enumerate_tuples, "tuples with sum(1 - 1/m_i) under a threshold")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--threshold", type=_rational, default=Fraction(3))
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--coprime", action="store_true")

    five = group("fivefold", "simply connected 5-manifolds")
    sp = leaf(five, "circle-action", cmd_fivefold_circle_action,
              "does a fixed point free circle action exist")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--torsion", type=_torsion, default=[])
    sp.add_argument("--i", type=_iL, default=0)

    ex = group("exact", "integer utilities")
    sp = leaf(ex, "gcd", cmd_exact_gcd, "extended gcd")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp = leaf(ex, "factor", cmd_exact_factor, "prime factorization")
    sp.add_argument("n", type=int)
    sp = leaf(ex, "snf", cmd_exact_snf, "Smith normal form, rows separated by ';'")
    sp.add_argument("rows", type=_matrix)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    name = " ".join(filter(None, (args.command, getattr(args, "subcommand", None))))
    try:
        inputs, results = args.func(args)
    except InputError as exc:
        print(f"wps-lab {name}: {exc}", file=err)
        return 2
    except ConsistencyFailure as exc:
        print(f"wps-lab {name}: internal consistency failure: {exc}", file=err)
        return 1
    out.write(render(envelope(name, inputs, results), args.format))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
