"""Command line front end: ``mtl catalog|analyze|classify|compare|cover``.

Exit codes: 0 on success, 2 for invalid input, 3 when an internal
verification fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import gcd, isqrt

from .algebra import AlgebraicReal, FieldElement
from .catalog import UnknownConfiguration, catalog, catalog_names
from .commensurability import DEFAULT_BOUND, compare
from .complex import InvalidComplex, SquareComplex, format_delta, is_free_by_graph
from .covers import CoverError, CoverSpec, build_cover, cyclic_cover_from_cut, lift_data, verify_cover
from .flat import DisconnectedConfiguration, area, build_flat, cylinder_dimensions
from .jinvariant import j_of_flat
from .twist import (
    KERNEL_CAVEAT,
    Classification,
    NotPseudoAnosov,
    TwistWord,
    WordSyntaxError,
    classify,
    expansion_factor,
    image_is_free,
    rho,
    trace_field_data,
    trace_value,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3


class InputError(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


def default_digits() -> int:
    try:
        return int(os.environ.get("MTL_DIGITS", "12"))
    except ValueError:
        return 12


# -- rendering ---------------------------------------------------------------

def quadratic_closed_form(x: AlgebraicReal) -> str | None:
    """'(a + b*sqrt(d))/c' style text for rational or quadratic numbers."""
    if x.is_rational():
        return str(x.as_rational())
    f = x.minpoly.monic()
    if f.degree != 2:
        return None
    c0, b = f.coeffs[0], f.coeffs[1]
    D = b * b - 4 * c0  # root = (-b +- sqrt(D)) / 2
    den = D.denominator
    num = D.numerator * den  # D = num / den^2
    k, d = 1, num
    for p in range(2, isqrt(abs(num)) + 1):
        while d % (p * p) == 0:
            d //= p * p
            k *= p
    # root = (-b +- k sqrt(d) / den) / 2
    above = x.compare(-b / 2) > 0
    lead = -b / 2
    coef = Fraction(k, 2 * den)
    L = lead.denominator * coef.denominator // gcd(lead.denominator, coef.denominator)
    A, B = int(lead * L), int(coef * L)
    surd = f"{B if B != 1 else ''}√{d}"
    if A:
        body = f"{A} {'+' if above else '-'} {surd}"
    else:
        body = surd if above else f"-{surd}"
    return body if L == 1 else f"({body})/{L}"


def real_json(x: AlgebraicReal, digits: int) -> dict:
    out = x.to_json(digits)
    out["minpoly_text"] = x.minpoly.monic().pretty()
    cf = quadratic_closed_form(x)
    if cf is not None:
        out["closed_form"] = cf
    return out


def element_json(x: FieldElement, digits: int) -> dict:
    return {"poly": x.pretty("t"), "decimal": str(x.approx(digits)), "digits": digits}


def field_json(f, digits: int) -> dict:
    K = f.field
    if K.degree == 1:
        return {"degree": 1, "generator": "1"}
    return {"degree": K.degree, "generator_t": real_json(K.theta, digits)}


# -- loading -----------------------------------------------------------------

def load_complex(name: str | None, path: str | None) -> SquareComplex:
    if (name is None) == (path is None):
        raise InputError("give exactly one of --name or --config")
    if name is not None:
        try:
            return catalog(name)
        except UnknownConfiguration as e:
            raise InputError(str(e.args[0] if e.args else e)) from None
    try:
        with open(path) as fh:
            c = SquareComplex.loads(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise InputError(f"cannot read complex from {path}: {e}") from None
    if c.violations:
        raise InputError("invalid complex:\n" + "\n".join(f"  {v}" for v in c.violations))
    return c


def parse_word(text: str) -> TwistWord:
    try:
        return TwistWord.parse(text)
    except WordSyntaxError as e:
        raise InputError(str(e)) from None


# -- reports -----------------------------------------------------------------

def analysis_report(c: SquareComplex, digits: int) -> dict:
    f = build_flat(c)
    cyl = cylinder_dimensions(f)
    J = j_of_flat(f)
    return {
        "name": c.name,
        "squares": c.squares,
        "N": [list(r) for r in c.incidence],
        "graph": c.graph.describe(),
        "connected": c.is_connected(),
        "mu": real_json(f.mu, digits),
        "field": field_json(f, digits),
        "heights": [element_json(x, digits) for x in f.heights],
        "widths": [element_json(x, digits) for x in f.widths],
        "cylinders": [{"curve": f"{cy.direction}{cy.index + 1}", "height": element_json(cy.height, digits),
                       "circumference": element_json(cy.circumference, digits)} for cy in cyl],
        "delta": format_delta(c.delta),
        "delta_counts": {str(k): v for k, v in c.delta.items()},
        "euler_characteristic": c.euler_characteristic,
        "genus": c.genus,
        "marked_points": len(c.marked),
        "area": element_json(area(f), digits),
        "J": J.to_json(),
        "free_by_graph": is_free_by_graph(c.graph),
        "image_free_sqrt_mu_at_least_2": image_is_free(f.mu),
    }


def classify_report(c: SquareComplex, w: TwistWord, digits: int) -> dict:
    f = build_flat(c)
    cls = classify(w, f.mu)
    out = {"name": c.name, "word": str(w), "mu": real_json(f.mu, digits),
           "matrix": rho(w).to_json(), "trace": rho(w).trace.pretty("mu"),
           "trace_value": str(trace_value(w, f.mu).approx(digits)),
           "classification": cls.value}
    if cls is Classification.FINITE_ORDER:
        out["caveat"] = KERNEL_CAVEAT
    if cls is Classification.PSEUDO_ANOSOV:
        e = expansion_factor(w, f.mu)
        out["lambda"] = real_json(e.value, digits)
        tf = trace_field_data(e)
        out["lambda_field"] = {"degree": tf.degree, "description": tf.describe(),
                               "polynomial_discriminant": str(tf.polynomial_discriminant),
                               "field_discriminant": tf.field_discriminant, "note": tf.note}
    return out


def _text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k, v in report.items():
        if isinstance(v, dict):
            if "decimal" in v and ("poly" in v or "minpoly" in v):
                exact = v.get("closed_form") or v.get("poly") or v.get("minpoly_text")
                lines.append(f"{pad}{k}: {exact}  (~{v['decimal']})")
            else:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                if "decimal" in item:
                    lines.append(f"{pad}  - {item.get('poly') or item.get('closed_form')}  (~{item['decimal']})")
                else:
                    lines.append(f"{pad}  - " + ", ".join(f"{a}={_short(b)}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def _short(v):
    if isinstance(v, dict) and "decimal" in v:
        return v.get("poly") or v.get("closed_form") or v["decimal"]
    return v


def emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(_text(report))


# -- commands ----------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for name in catalog_names():
            c = catalog(name)
            f = build_flat(c)
            rows.append({"name": name, "squares": c.squares, "mu": quadratic_closed_form(f.mu) or str(f.mu),
                         "mu_decimal": str(f.mu.approx(args.digits)), "delta": format_delta(c.delta),
                         "genus": c.genus})
        if args.json:
            print(json.dumps(rows, indent=2))
        else:
            for r in rows:
                print(f"{r['name']:<18} squares={r['squares']:<3} genus={r['genus']:<3} "
                      f"delta={r['delta']:<14} mu={r['mu']}")
        return EXIT_OK
    if not args.name:
        raise InputError("catalog show needs a NAME")
    c = load_complex(args.name, None)
    text = c.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    c = load_complex(args.name, args.config)
    emit(analysis_report(c, args.digits), args.json)
    return EXIT_OK


def cmd_classify(args) -> int:
    c = load_complex(args.name, args.config)
    emit(classify_report(c, parse_word(args.word), args.digits), args.json)
    return EXIT_OK


def cmd_compare(args) -> int:
    c1 = load_complex(args.name1, args.config1)
    c2 = load_complex(args.name2, args.config2)
    w1, w2 = parse_word(args.word1), parse_word(args.word2)
    try:
        rep = compare(c1, w1, c2, w2, args.bound)
    except NotPseudoAnosov as e:
        raise InputError(f"{e} (classification {e.classification.value})") from None
    out = {"first": {"name": c1.name, "word": str(w1)}, "second": {"name": c2.name, "word": str(w2)},
           "bound": args.bound, **rep.to_json(args.digits)}
    emit(out, args.json)
    return EXIT_OK


def _cover_spec(args, c: SquareComplex) -> CoverSpec:
    if args.spec:
        try:
            with open(args.spec) as fh:
                return CoverSpec.loads(fh.read())
        except (OSError, ValueError, KeyError) as e:
            raise InputError(f"cannot read cover spec from {args.spec}: {e}") from None
    if args.degree == 1 and not args.cut:
        return CoverSpec(1)
    if not args.cut:
        raise InputError("give --spec FILE or --cut g1,g2,... with --degree n")
    try:
        cut = [int(t) for t in args.cut.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"bad cut list {args.cut!r}") from None
    return cyclic_cover_from_cut(c, cut, args.degree)


def _word_pairs(items):
    if not items:
        return None
    pairs = []
    for item in items:
        up, sep, down = item.partition(":")
        pairs.append((parse_word(up), parse_word(down) if sep else None))
    return pairs


def cmd_cover(args) -> int:
    c = load_complex(args.name, args.config)
    spec = _cover_spec(args, c)
    if args.action == "build":
        cover = build_cover(c, spec, allow_branching=args.allow_branching)
        lifts = lift_data(c, cover)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(cover.dumps())
        report = {"base": c.name, "degree": spec.degree, "spec": spec.to_json(),
                  "cover_squares": cover.squares, "cover_genus": cover.genus,
                  "cover_delta": format_delta(cover.delta), "cover_N": [list(r) for r in cover.incidence],
                  "lifts": lifts.to_json()}
        if not args.out:
            report["cover"] = cover.to_json()
        emit(report, args.json)
        for w in lifts.homomorphism()["warnings"]:
            print(f"warning: {w}", file=sys.stderr)
        return EXIT_OK
    rep = verify_cover(c, spec, _word_pairs(args.words))
    out = {"base": c.name, "degree": spec.degree, **rep.to_json()}
    if not rep.ok:
        raise VerificationFailure(out)
    emit(out, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtl", description="Two-multitwist groups on square complexes")
    p.add_argument("--digits", type=int, default=None, help="decimal digits (default $MTL_DIGITS or 12)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, config=True):
        sp.add_argument("--json", action="store_true")
        if config:
            sp.add_argument("--name", help="catalog name, e.g. A4")
            sp.add_argument("--config", help="mtl-complex v1 file")

    sp = sub.add_parser("catalog", help="list or print catalog complexes")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out")
    common(sp, config=False)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("analyze", help="flat structure, singularities and J")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("classify", help="classify a word in the two multitwists")
    common(sp)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("compare", help="commensurability obstructions between two words")
    sp.add_argument("--json", action="store_true")
    for i in ("1", "2"):
        sp.add_argument(f"--name{i}")
        sp.add_argument(f"--config{i}")
        sp.add_argument(f"--word{i}", required=True)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("cover", help="build or verify a finite cover")
    sp.add_argument("action", choices=["build", "verify"])
    common(sp)
    sp.add_argument("--spec", help="cover spec JSON file")
    sp.add_argument("--cut", help="comma-separated gluing indices (0-based)")
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--words", nargs="*", help="upstairs words, optionally 'UP:DOWN'")
    sp.add_argument("--allow-branching", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_cover)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.digits is None:
        args.digits = default_digits()
    try:
        return args.func(args)
    except (InputError, InvalidComplex, DisconnectedConfiguration, CoverError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailure as e:
        print(json.dumps(e.report, indent=2))
        print("error: verification failed", file=sys.stderr)
        return EXIT_VERIFY
    except ArithmeticError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
