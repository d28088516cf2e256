"""Command-line interface: enumerate, classify, compute, verify, export.

Subcommands: places, semigroup, verify, polyfam, aut, each accepting the
global flags --t, --format, --seed, --prec, --out.  Exit codes: 0
success, 1 verification failure, 2 usage error.  JSON is the format of
record: top level {"q", "genus", "command", "results"}, field elements
as low-degree-first coefficient vectors with the moduli recorded in a
header; CSV is lossy (no field header).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import polyfamilies
from .curve import Curve, Place
from .weierstrass import full_census, semigroup_at, verify_gaps, verify_nongaps

_CAP_DEFAULT = 27
_CAP_HARD = 81


def _common_flags(p: argparse.ArgumentParser):
    p.add_argument("--t", type=int, required=False, default=2,
                   help="field exponent: q = 3^t (t >= 2)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--prec", type=int, default=None,
                   help="series precision override (default 2q+1)")
    p.add_argument("--out", type=str, default=None, help="output path")
    p.add_argument("--q-cap", type=int, default=_CAP_DEFAULT,
                   help=f"largest allowed q (hard cap {_CAP_HARD})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="charthree",
        description="Weierstrass semigroups, gap certificates and "
                    "automorphisms of the char-3 maximal curve "
                    "x^q + x + p(y)^2 = 0")
    sub = ap.add_subparsers(dest="command", required=True)

    p_places = sub.add_parser("places", help="enumerate/classify places")
    p_places.add_argument("--class", dest="klass", default=None,
                          choices=("infinity", "beta-zero", "beta-one",
                                   "rational-general", "nonrational"),
                          help="restrict to one classification")
    p_places.add_argument("--beta-order", type=int, default=None,
                          help="sample non-rational places with this gamma order")
    p_places.add_argument("--max-degree", type=int, default=4,
                          help="relative degree bound for sampling")

    p_semi = sub.add_parser("semigroup", help="semigroup/gap set at a place")
    p_semi.add_argument("--place", default=None,
                        help='"infinity" or comma-separated F_3 coefficients '
                             '"a0,a1,..;b0,b1,.." at the F_q^2 level')
    p_semi.add_argument("--class", dest="klass", default=None,
                        choices=("beta-zero", "beta-one", "rational-general"))
    p_semi.add_argument("--index", type=int, default=0,
                        help="which enumerated place of the class")
    p_semi.add_argument("--beta-order", type=int, default=None,
                        help="sample a non-rational place with this gamma order")
    p_semi.add_argument("--max-degree", type=int, default=4)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--scope", default="all",
                          choices=("polyfam", "valuations", "semigroups",
                                   "autgroup", "all"))

    p_poly = sub.add_parser("polyfam", help="polynomial family checks/values")
    p_poly.add_argument("--max-i", type=int, default=12)
    p_poly.add_argument("--samples", type=int, default=25)

    p_aut = sub.add_parser("aut", help="automorphism group facts")

    for p in (p_places, p_semi, p_verify, p_poly, p_aut, ap):
        if p is not ap:
            _common_flags(p)
    return ap


# ---------------------------------------------------------------------------
# serialization


def _field_header(curve: Curve, levels) -> dict:
    return {
        "characteristic": 3,
        "levels": {str(n): list(curve.tower.level(n).modulus) for n in sorted(levels)},
    }


def _elem(e) -> list[int]:
    return list(e.coeffs)


def _place_row(p: Place) -> dict:
    if p.is_infinity():
        return {"place": "infinity", "beta": "infinity", "degree": 1,
                "class": "infinity", "i": None, "K": None}
    return {
        "a": _elem(p.a), "b": _elem(p.b), "level": p.a.level.n,
        "beta": _elem(p.beta), "degree": p.degree,
        "class": p.place_class.kind, "i": p.place_class.i, "K": p.place_class.K,
    }


def _emit(doc: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        rows = doc.get("results", [])
        if rows:
            keys = sorted({k for r in rows if isinstance(r, dict) for k in r})
            writer = csv.DictWriter(buf, fieldnames=keys)
            writer.writeheader()
            for r in rows:
                if isinstance(r, dict):
                    writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict))
                                     else v for k, v in r.items()})
        text = buf.getvalue()
    else:
        lines = [f"q = {doc.get('q')}  genus = {doc.get('genus')}  "
                 f"command = {doc.get('command')}"]
        for r in doc.get("results", []):
            lines.append("  " + json.dumps(r))
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _document(curve: Curve, command: str, results, extra: dict | None = None) -> dict:
    doc = {"q": curve.q, "genus": curve.genus, "command": command,
           "results": results}
    if extra:
        doc.update(extra)
    return doc


# ---------------------------------------------------------------------------
# subcommands


def _make_curve(args) -> Curve:
    if args.t < 2:
        raise SystemExit2("t must be >= 2: for t = 1 the curve is elliptic "
                          "and has an infinite automorphism group")
    q = 3 ** args.t
    cap = min(args.q_cap, _CAP_HARD)
    if q > cap:
        raise SystemExit2(f"q = {q} exceeds the cap {cap}")
    return Curve(args.t)


class SystemExit2(Exception):
    """Usage error: exits with code 2."""


def cmd_places(args) -> int:
    curve = _make_curve(args)
    rows = []
    if args.beta_order is not None:
        places = curve.sample_nonrational(args.beta_order, count=3,
                                          max_rel_degree=args.max_degree)
        rows = [_place_row(p) for p in places]
    else:
        want = None if args.klass is None else args.klass.replace("-", "_")
        for p in curve.enumerate_rational():
            kind = p.place_class.kind
            if want is None or kind == want or \
                    (want == "nonrational" and kind.startswith("nonrational")):
                rows.append(_place_row(p))
    levels = {2 * curve.t} | {r["level"] for r in rows if "level" in r}
    _emit(_document(curve, "places", rows,
                    {"field": _field_header(curve, levels)}),
          args.format, args.out)
    return 0


def _resolve_place(curve: Curve, args) -> Place:
    if args.place == "infinity":
        return curve.infinity()
    if args.place is not None:
        try:
            a_str, b_str = args.place.split(";")
            a = curve.base.element([int(c) for c in a_str.split(",")])
            b = curve.base.element([int(c) for c in b_str.split(",")])
        except (ValueError, IndexError) as exc:
            raise SystemExit2(f"cannot parse place selector: {exc}")
        return curve.place_from_coords(a, b)
    if args.beta_order is not None:
        places = curve.sample_nonrational(args.beta_order, count=1,
                                          max_rel_degree=args.max_degree)
        if not places:
            raise SystemExit2(f"no non-rational place with gamma order "
                              f"{args.beta_order} at degree <= {args.max_degree}")
        return places[0]
    if args.klass is not None:
        want = args.klass.replace("-", "_")
        matches = [p for p in curve.enumerate_rational()
                   if p.place_class.kind == want]
        if args.index >= len(matches):
            raise SystemExit2(f"class {args.klass} has only {len(matches)} places")
        return matches[args.index]
    raise SystemExit2("no place selector given (--place/--class/--beta-order)")


def cmd_semigroup(args) -> int:
    curve = _make_curve(args)
    place = _resolve_place(curve, args)
    assignment = semigroup_at(curve, place)
    result = {
        "place": _place_row(place),
        "theorem_tag": assignment.theorem_tag,
        "generators": list(assignment.semigroup.generators)
        if assignment.semigroup else None,
        "gaps": list(assignment.gap_set.gaps),
        "genus": assignment.gap_set.genus,
        "conductor": assignment.gap_set.conductor,
    }
    levels = {2 * curve.t}
    if not place.is_infinity():
        levels.add(place.a.level.n)
    _emit(_document(curve, "semigroup", [result],
                    {"field": _field_header(curve, levels)}),
          args.format, args.out)
    return 0


def cmd_polyfam(args) -> int:
    curve = _make_curve(args)
    rng = random.Random(args.seed)
    lvl = curve.base
    results = []
    failures = 0
    for _ in range(args.samples):
        beta = lvl.random_element(rng)
        if beta.is_zero() or beta == 1:
            continue
        chain = polyfamilies.eval_chain(args.max_i, beta)
        closed_ok = all(
            polyfamilies.eval_closed(i, beta) == chain[i]
            for i in range(args.max_i + 1))
        ident_ok = polyfamilies.identity_check(2, 3, 1, beta)
        coroll_ok = all(polyfamilies.corollary_check(i, beta)
                        for i in range(1, args.max_i + 1))
        if not (closed_ok and ident_ok and coroll_ok):
            failures += 1
        results.append({"beta": _elem(beta), "closed_matches": closed_ok,
                        "identities": ident_ok, "corollary": coroll_ok})
    sym_ok = polyfamilies.corollary_check_symbolic(args.max_i)
    results.append({"symbolic_corollary_max_i": args.max_i, "ok": sym_ok})
    if not sym_ok:
        failures += 1
    _emit(_document(curve, "polyfam", results), args.format, args.out)
    return 1 if failures else 0


def cmd_aut(args) -> int:
    from . import automorphisms
    curve = _make_curve(args)
    elements = automorphisms.group_elements(curve)
    report = full_census(curve)
    ident = automorphisms.identity(curve)
    axioms_ok = all(
        automorphisms.compose(sig, automorphisms.inverse(sig)) == ident
        for sig in elements)
    result = {
        "order": len(elements),
        "expected_order": 2 * curve.q * curve.q // 3,
        "inverses_ok": axioms_ok,
        "orbit_sizes": report.orbit_sizes,
        "orbits_class_constant": report.orbits_class_constant,
    }
    ok = (len(elements) == result["expected_order"] and axioms_ok
          and report.orbits_class_constant)
    _emit(_document(curve, "aut", [result]), args.format, args.out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    curve = _make_curve(args)
    results = []
    failed = False

    def record(name, ok, detail=""):
        nonlocal failed
        results.append({"check": name, "ok": bool(ok), "detail": detail})
        if not ok:
            failed = True

    def run(name, fn, detail=""):
        try:
            fn()
        except (AssertionError, ArithmeticError, ValueError) as exc:
            record(name, False, str(exc))
        else:
            record(name, True, detail)

    scope = args.scope
    if scope in ("polyfam", "all"):
        rng = random.Random(args.seed)
        lvl = curve.base
        ok = True
        for _ in range(50):
            beta = lvl.random_element(rng)
            if beta.is_zero() or beta == 1:
                continue
            chain = polyfamilies.eval_chain(12, beta)
            if any(polyfamilies.eval_closed(i, beta) != chain[i]
                   for i in (0, 1, 5, 12)):
                ok = False
            if not polyfamilies.identity_check(2, 1, 3, beta):
                ok = False
        record("polyfam.closed_vs_recursive", ok)
        record("polyfam.symbolic_corollary", polyfamilies.corollary_check_symbolic(12))

    reps: dict[str, Place] = {}
    samples: list[Place] = []
    if scope in ("semigroups", "valuations", "all"):
        places = curve.enumerate_rational()
        expected = curve.q * curve.q + 1 + 2 * curve.q * curve.genus
        record("census.count", len(places) == expected,
               f"{len(places)} places (want {expected})")
        for p in places:
            reps.setdefault(str(p.place_class), p)
        for o in curve.feasible_gamma_orders():
            samples.extend(curve.sample_nonrational(o, count=1))
        record("nonrational.sampled", bool(samples),
               f"{len(samples)} places, classes "
               f"{sorted({str(p.place_class) for p in samples})}")

    if scope in ("valuations", "all"):
        from .localseries import LocalData, build_beta1_chain
        for tag, p in sorted(reps.items()):
            if p.is_infinity() or p.beta.is_zero():
                continue
            local = LocalData(curve, p, prec=args.prec)
            if p.place_class.kind == "beta_one":
                run(f"valuations[{tag}]",
                    lambda l=local: build_beta1_chain(curve, l.basis, curve.m - 1))
            else:
                i = p.place_class.i
                run(f"valuations[{tag}]",
                    lambda l=local, i=i: l.f_chain(min(i, curve.m - 1)))
        for p in samples:
            local = LocalData(curve, p, prec=args.prec)
            K = p.place_class.K
            run(f"valuations[{p.place_class}]",
                lambda l=local, K=K: l.g_chain(min(K, curve.m - 2)))

    if scope in ("semigroups", "all"):
        def cert_rows(certs):
            return [{"value": c.value, "witness": c.witness, "v_at_P": c.v_at_P,
                     "method": c.method, "ok": c.verified} for c in certs]

        for tag, p in sorted(reps.items()):
            assignment = semigroup_at(curve, p)
            record(f"semigroup.genus[{tag}]",
                   assignment.gap_set.genus == curve.genus)
            certs = verify_nongaps(curve, assignment, prec=args.prec)
            record(f"nongap_certificates[{tag}]",
                   all(c.verified for c in certs), f"{len(certs)} witnesses")
            results[-1]["certificates"] = cert_rows(certs)
        for p in samples:
            assignment = semigroup_at(curve, p)
            certs = verify_gaps(curve, assignment, prec=args.prec)
            record(f"gap_certificates[{assignment.theorem_tag}]",
                   all(c.verified for c in certs),
                   f"{len(certs)} gaps witnessed")
            results[-1]["certificates"] = cert_rows(certs)

    if scope in ("autgroup", "all"):
        from . import automorphisms
        elements = automorphisms.group_elements(curve)
        record("autgroup.order", len(elements) == 2 * curve.q * curve.q // 3,
               f"|G| = {len(elements)}")
        report = full_census(curve)
        record("autgroup.orbits_partition",
               sum(report.orbit_sizes) == report.total_places,
               f"sizes {report.orbit_sizes}")
        record("autgroup.orbit_class_constant", report.orbits_class_constant)
    _emit(_document(curve, "verify", results), args.format, args.out)
    return 1 if failed else 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "places": cmd_places,
        "semigroup": cmd_semigroup,
        "verify": cmd_verify,
        "polyfam": cmd_polyfam,
        "aut": cmd_aut,
    }
    try:
        return handlers[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
