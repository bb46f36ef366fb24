"""Command line front end.

Exit codes: 0 success, 1 oracle mismatch, 2 unreadable input,
3 input outside a command's scope (for instance ``annihilator`` on
generators whose zero set is not the origin).
"""

import argparse
import json
import re
import sys

from .currents import cross_check
from .errors import LatticeOverflowError, MonomialError, NotArtinianError
from .general import partial_annihilator
from .ideals import minimalize, variety_is_origin
from .newton import closure_of_polyhedron, compute_newton_polyhedron
from .parsing import load_source, parse_ideal
from .residue import annihilator, essential_sets_of, verify_chain
from .staircase import render_staircase

COMMANDS = ("facets", "essential", "annihilator", "closure", "chain", "partial", "render")

EXIT_OK, EXIT_ORACLE, EXIT_PARSE, EXIT_SCOPE = 0, 1, 2, 3

_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(doc) -> str:
    """Indented JSON with integer lists kept on one line."""
    text = json.dumps(doc, indent=2)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(re.split(r",\s*", m.group(1))) + "]", text)


def _gens(ideal):
    return [list(g) for g in ideal.generators]


def _facets_json(P):
    return [{"normal": list(f.normal), "offset": f.offset, "compact": f.compact,
             "onFacet": list(f.on_facet)} for f in P.facets]


def _essential_json(sets):
    return [{"indices": list(s.indices), "alpha": list(s.alpha), "det": s.determinant,
             "facet": s.facet_index} for s in sets]


def _partial_json(report):
    terms = []
    for t in report.terms:
        terms.append({
            "indexSet": list(t.index_set),
            "members": list(t.members),
            "status": t.status,
            "alpha": list(t.alpha_restricted),
            "contribution": _gens(t.contribution) if t.contribution else None,
        })
    return {"terms": terms, "partialAnnihilator": _gens(report.partial_annihilator),
            "complete": report.complete, "unknownCount": report.unknown_count,
            "codim": report.codim, "mu": report.mu}


def _oracle_failures(points, ideal):
    return [list(x) for x in cross_check(points, ideal)]


def _render_layers(points):
    n = len(points[0])
    ideal = minimalize(n, points)
    if variety_is_origin(points):
        chain = verify_chain(points)
        return [("(z^A)", ideal), ("Ann R", chain.annihilator),
                (f"closure of (z^A)^{chain.mu}", chain.closure_power)]
    report = partial_annihilator(points)
    return [("(z^A)", ideal), ("partial Ann R", report.partial_annihilator)]


def run_command(command, source, *, fmt="json", strip_redundant=False, oracle=False,
                power=1):
    """Run one command on a parsed source; return (document, exit code)."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    points = source.exponents
    doc = {"dimension": source.dimension, "generators": [list(a) for a in points]}
    warnings = list(source.warnings)
    code = EXIT_OK
    try:
        if command in ("facets", "essential"):
            P = compute_newton_polyhedron(points)
            doc["facets"] = _facets_json(P)
            doc["vertices"] = list(P.vertex_indices)
            if command == "essential":
                if not variety_is_origin(points):
                    raise NotArtinianError("essential sets need generators vanishing only "
                                           "at the origin")
                doc["essentialSets"] = _essential_json(essential_sets_of(P))
        elif command == "annihilator":
            rep = annihilator(points)
            doc["essentialSets"] = _essential_json(rep.essential_sets)
            doc["annihilator"] = _gens(rep.annihilator)
            doc["equalsIdeal"] = rep.equals_ideal
            doc["completeIntersection"] = rep.complete_intersection
            if oracle:
                bad = _oracle_failures(points, rep.annihilator)
                doc["oracleMismatches"] = bad
                code = EXIT_ORACLE if bad else code
        elif command == "closure":
            P = compute_newton_polyhedron(points)
            doc["closure"] = {"power": power, "generators": _gens(closure_of_polyhedron(P, power))}
        elif command == "chain":
            ch = verify_chain(points)
            doc["chain"] = {"closurePowerMu": _gens(ch.closure_power),
                            "annihilator": _gens(ch.annihilator), "ideal": _gens(ch.ideal),
                            "leftStrict": ch.left_strict, "rightStrict": ch.right_strict,
                            "mu": ch.mu,
                            "witness": list(ch.witness) if ch.witness else None}
            if oracle:
                bad = _oracle_failures(points, ch.annihilator)
                doc["oracleMismatches"] = bad
                code = EXIT_ORACLE if bad else code
        elif command == "partial":
            rep = partial_annihilator(points, strip_redundant=strip_redundant)
            warnings += [w for w in rep.warnings if w not in warnings]
            doc["partial"] = _partial_json(rep)
            if oracle:
                if variety_is_origin(rep.points):
                    bad = _oracle_failures(rep.points, rep.partial_annihilator)
                    doc["oracleMismatches"] = bad
                    code = EXIT_ORACLE if bad else code
                else:
                    warnings.append("oracle check skipped: it only covers generators "
                                    "vanishing at the origin")
        elif command == "render":
            pic = render_staircase(_render_layers(points), "ascii" if fmt == "json" else fmt)
            doc["render"] = {
                "format": pic.format, "bounds": list(pic.bounds),
                "layers": [{"label": l.label, "generators": [list(g) for g in l.generators],
                            "shade": l.shade} for l in pic.layers],
                "text": pic.text,
            }
    except (MonomialError, LatticeOverflowError) as exc:
        doc = {"error": str(exc)}
        code = EXIT_SCOPE
    doc["warnings"] = warnings
    return doc, code


def build_parser():
    p = argparse.ArgumentParser(
        prog="monores",
        description="Residue-current annihilators of monomial ideals.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("source", nargs="?",
                   help="input file (monomial text or JSON); '-' reads stdin")
    p.add_argument("-e", "--expr", help="generators given inline, e.g. 'z1^2, z1 z2, z2^3'")
    p.add_argument("--format", choices=("json", "ascii", "svg"), default=None,
                   help="output format; ascii and svg only apply to 'render'")
    p.add_argument("-o", "--output", help="write the picture to this file (render only)")
    p.add_argument("--power", type=int, default=1, help="power r for 'closure' (default 1)")
    p.add_argument("--strip-redundant", action="store_true",
                   help="drop non-minimal generators before 'partial'")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check membership against the current pairing oracle")
    return p


def _read_source(args):
    if args.expr is not None:
        return parse_ideal(args.expr)
    if args.source in (None, "-"):
        return parse_ideal(sys.stdin.read(), "<stdin>")
    return load_source(args.source)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("ascii" if args.command == "render" else "json")
    if args.command != "render" and fmt != "json":
        parser.error("only 'render' supports ascii or svg output")
    if args.power < 1:
        parser.error("--power must be at least 1")

    try:
        source = _read_source(args)
    except (MonomialError, OSError) as exc:
        print(f"monores: {exc}", file=sys.stderr)
        return EXIT_PARSE

    doc, code = run_command(args.command, source, fmt=fmt,
                            strip_redundant=args.strip_redundant,
                            oracle=args.oracle, power=args.power)
    if "error" in doc:
        print(f"monores: {doc['error']}", file=sys.stderr)
    if args.command == "render" and fmt != "json" and "render" in doc:
        text = doc["render"]["text"]
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    if args.command == "render" and "render" in doc:
        del doc["render"]["text"]
    print(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
