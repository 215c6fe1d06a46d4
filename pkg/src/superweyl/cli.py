"""Batch command-line front end.

Subcommands: roots, verma-dims, bwb, covariance, very-ample,
classical-section.  Weights are entered as values on the simple coroots
(for gl families the final coordinate is the value on the last diagonal
Cartan element, so the count always equals the Cartan rank).  Exit
codes: 0 success, 1 domain error (non-dominant weight, inconclusive
truncation), 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .superalgebra import (build_algebra, root_datum, borel,
                           parabolic_from_simples, SuperweylError,
                           UnsupportedFamilyError, Weight)
from .verma import VermaModule
from .borelweil import (extract_irreducible, check_dominance,
                        default_max_height)
from .bigcell import SectionPolynomial, check_covariance, section_space
from .embedding import (build_graded_algebra, is_very_ample,
                        check_classical_section, semi_invariant_locus,
                        NonDominantCharacterError)


class UsageError(Exception):
    pass


def _parse_weight(g, text):
    try:
        marks = [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError("weight coordinates must be integers or num/den "
                         "fractions, got %r" % text)
    datum = root_datum(g)
    try:
        return datum.weight_from_marks(marks)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parabolic(g, spec_text):
    if not spec_text:
        return borel(g)
    try:
        idx = [int(p.strip()) for p in spec_text.split(",") if p.strip()]
    except ValueError:
        raise UsageError("--parabolic wants comma-separated simple root "
                         "indices (1-based)")
    datum = root_datum(g)
    for i in idx:
        if not (1 <= i <= len(datum.simple_roots)):
            raise UsageError("simple root index %d out of range 1..%d"
                             % (i, len(datum.simple_roots)))
    return parabolic_from_simples(g, [i - 1 for i in idx])


def _emit(payload, fmt, text_renderer):
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return text_renderer(payload)


def _cmd_roots(args):
    g = build_algebra(args.algebra)
    datum = root_datum(g)
    payload = datum.to_json()

    def text(p):
        lines = ["roots of %s:" % p["algebra"]]
        for r in p["roots"]:
            lines.append("  %s%s %s ht=%d (%s)"
                         % ("+" if r["positive"] else "-", "" , r["vector"],
                            r["height"], r["parity"]))
        lines.append("simple roots: %d" % len(p["simpleRoots"]))
        return "\n".join(lines) + "\n"

    return 0, _emit(payload, args.format, text)


def _cmd_verma_dims(args):
    g = build_algebra(args.algebra)
    lam = _parse_weight(g, args.weight)
    M = VermaModule(g, lam, args.max_depth)
    payload = M.dimension_table()

    def text(p):
        lines = ["Verma weight spaces for %s, highest weight (%s):"
                 % (p["algebra"], ",".join(p["highestWeight"]))]
        for row in p["spaces"]:
            lines.append("  height %2d dim %3d radical %s (%s)"
                         % (row["height"], row["dim"],
                            row["radical"], row["parity"]))
        return "\n".join(lines) + "\n"

    return 0, _emit(payload, args.format, text)


def _cmd_bwb(args):
    g = build_algebra(args.algebra)
    lam = _parse_weight(g, args.weight)
    dom = check_dominance(g, lam)
    mod = extract_irreducible(g, lam, args.max_depth)
    payload = mod.to_json()
    payload["dominanceScreen"] = dom.to_json()

    def text(p):
        if p["finiteDimensional"]:
            return ("irreducible module: dims %d|%d over %s\n"
                    % (p["dims"]["even"], p["dims"]["odd"], p["algebra"]))
        return "did not stabilize: %s\n" % p["status"]

    out = _emit(payload, args.format, text)
    if not mod.finite_dimensional:
        out += ("" if args.format == "json"
                else "hint: increase --max-depth\n")
        return 1, out
    return 0, out


def _cmd_covariance(args):
    g = build_algebra(args.algebra)
    lam = _parse_weight(g, args.weight)
    cap = args.max_depth or default_max_height()
    sections = [("1", SectionPolynomial.constant(g, lam, cap))]
    for i, lab in enumerate(g.negative_labels()):
        sections.append(("t[%s]" % lab[2:-1],
                         SectionPolynomial.coordinate(g, lam, cap, i)))
    reports = []
    ok = True
    for name, p in sections:
        rep = check_covariance(p)
        r = rep.to_json()
        r["section"] = name
        ok = ok and rep.passed
        reports.append(r)
    payload = {"algebra": g.name, "lambda": lam.to_json(),
               "allPassed": ok, "sections": reports}

    def text(p):
        lines = ["covariance over %s:" % p["algebra"]]
        for r in p["sections"]:
            lines.append("  %-12s %s" % (r["section"],
                                         "ok" if r["passed"] else
                                         "FAIL " + str(r["failures"])))
        return "\n".join(lines) + "\n"

    return (0 if ok else 1), _emit(payload, args.format, text)


def _cmd_very_ample(args):
    g = build_algebra(args.algebra)
    lam = _parse_weight(g, args.weight)
    P = _parabolic(g, args.parabolic)
    emb = build_graded_algebra(g, P, lam, args.max_degree)
    verdict = is_very_ample(emb)
    payload = verdict.to_json()
    payload["algebra"] = g.name
    payload["lambda"] = lam.to_json()
    payload["gradedDims"] = emb.graded_dims()

    def text(p):
        if p["veryAmple"]:
            return ("generated in degree 1 through degree %d; dims %s\n"
                    % (args.max_degree, p["dims"]))
        return "NOT generated in degree 1 (fails at degree %s)\n" % p["failDegree"]

    return 0, _emit(payload, args.format, text)


def _cmd_classical_section(args):
    g = build_algebra(args.algebra)
    lam = _parse_weight(g, args.weight)
    P = _parabolic(g, args.parabolic)
    emb = build_graded_algebra(g, P, lam, max(2, args.max_degree))
    cap = emb.pieces[1][0].cap if emb.pieces[1] else default_max_height()
    one = SectionPolynomial.constant(g, lam, cap)
    rep = check_classical_section(emb, one)
    locus = semi_invariant_locus(emb)
    payload = rep.to_json()
    payload["algebra"] = g.name
    payload["lambda"] = lam.to_json()
    payload["eigenlineDimension"] = len(locus)
    payload["eigenline"] = [p.render() for p in locus]

    def text(p):
        return ("classical section check: semi-invariant=%s "
                "powersDistinct=%s eigenline dim %d\n"
                % (p["semiInvariant"], p["powersDistinct"],
                   p["eigenlineDimension"]))

    code = 0 if (rep.passed() and len(locus) == 1) else 1
    return code, _emit(payload, args.format, text)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="superweyl",
        description="Exact Borel-Weil-Bott computations for basic Lie "
                    "superalgebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, weight=False, parabolic=False, degree=False):
        p.add_argument("--algebra", required=True,
                       help='family label, e.g. "B(0,1)", "gl(1|1)", "A(0,1)"')
        if weight:
            p.add_argument("--weight", required=True,
                           help="comma-separated marks on the simple coroots")
        p.add_argument("--max-depth", type=int,
                       default=None,
                       help="truncation height (default SUPERWEYL_MAX_DEPTH "
                            "or 12)")
        if parabolic:
            p.add_argument("--parabolic", default="",
                           help="comma-separated 1-based simple root indices "
                                "generating the Levi (empty: the Borel)")
        if degree:
            p.add_argument("--max-degree", type=int, default=2,
                           help="top degree of the graded algebra")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("roots", help="root system with parities")
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("verma-dims", help="Verma weight-space dimension table")
    common(p, weight=True)
    p.set_defaults(func=_cmd_verma_dims)

    p = sub.add_parser("bwb", help="irreducible module dims and character")
    common(p, weight=True)
    p.set_defaults(func=_cmd_bwb)

    p = sub.add_parser("covariance", help="covariance check of the hatted "
                                          "coordinate sections")
    common(p, weight=True)
    p.set_defaults(func=_cmd_covariance)

    p = sub.add_parser("very-ample", help="degree-one generation of O(G/P)")
    common(p, weight=True, parabolic=True, degree=True)
    p.set_defaults(func=_cmd_very_ample)

    p = sub.add_parser("classical-section",
                       help="semi-invariance and eigenline uniqueness")
    common(p, weight=True, parabolic=True, degree=True)
    p.set_defaults(func=_cmd_classical_section)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if getattr(args, "max_depth", None) is None and hasattr(args, "max_depth"):
        if args.command == "verma-dims":
            args.max_depth = default_max_height()
    try:
        code, out = args.func(args)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        sys.stderr.write(ap.format_usage())
        return 2
    except UnsupportedFamilyError as exc:
        sys.stderr.write("unknown algebra: %s\n" % exc)
        sys.stderr.write(ap.format_usage())
        return 2
    except NonDominantCharacterError as exc:
        sys.stderr.write("domain error: %s\n" % exc)
        return 1
    except SuperweylError as exc:
        sys.stderr.write("domain error: %s\n" % exc)
        return 1
    sys.stdout.write(out)
    return 0 if code == 0 else code


if __name__ == "__main__":
    sys.exit(main())
