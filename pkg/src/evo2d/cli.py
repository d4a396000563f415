"""Command-line front end.

Matrices are structure matrices: column j holds the coordinates of e_j^2,
so ``"a,b;c,d"`` means e1^2 = a e1 + c e2 and e2^2 = b e1 + d e2.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys
from collections import Counter
from dataclasses import dataclass

from .classify import classify
from .evoalg import StructureMatrix, report as ideals_report
from .exactmath import Field, all_matrices, parse_field
from .freealg import APPENDIX_SYSTEMS, nc_groebner, nc_normal_form, verify_appendix
from .identities import NAMED_IDENTITIES, check_identity, identity_space, lambda_str
from .morph import automorphism_group, brute_force_automorphisms, derivation_space
from .polyring import GBConfig, ResourceLimit
from .reps import (TERM_NAMES, BilinearForm, commutative_universal, nonexistence_commutative,
                   search_rep_2dim, universal_presentation)
from .squares import brute_force_square, render, square_of

COMMANDS = ("classify", "square", "aut", "der", "identities", "ideals", "urep", "search-rep",
            "appendix-verify", "census")

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE = 0, 2, 3


class InputError(ValueError):
    pass


@dataclass
class Report:
    data: dict
    text: str | None = None
    dot: str | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return dumps(self.data)
        if fmt == "dot" and self.dot is not None:
            return self.dot
        return self.text if self.text is not None else _plain(self.data)


def dumps(obj) -> str:
    """Compact JSON; json.loads followed by dumps reproduces it byte for byte."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _plain(data: dict) -> str:
    lines = []
    for k, v in data.items():
        lines.append(f"{k}: {v if isinstance(v, (str, int)) else json.dumps(v)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="evo2d",
        description="Two-dimensional evolution algebras with exact arithmetic. "
                    "--matrix takes the structure matrix: column j is e_j^2.")
    ap.add_argument("command", nargs="?", choices=COMMANDS)
    ap.add_argument("--batch", action="store_true",
                    help="read one request per line from stdin")
    ap.add_argument("--field", default="Q", help="Q, F<p>, Q(a,..) or F<p>(a,..)")
    ap.add_argument("--matrix", help='structure matrix "w11,w12;w21,w22"')
    ap.add_argument("--degree", type=int, default=3, help="identity degree (3 or 4)")
    ap.add_argument("--format", choices=("text", "json", "dot"), default="json")
    ap.add_argument("--bound", type=int, default=6, help="degree bound for free-algebra runs")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--check-brute-force", action="store_true")
    ap.add_argument("--identity", help="named identity to check (identities command)")
    ap.add_argument("--p", dest="pform",
                    help="bilinear *-polynomial: 8 coefficients in the order "
                         + ",".join(TERM_NAMES) + ", or terms like 'xy*=1,x*y=1'")
    ap.add_argument("--commutative", action="store_true",
                    help="urep: commutative quotient; appendix-verify: commutative strata")
    ap.add_argument("--system", help="appendix-verify: A3, A4 or A5ab")
    ap.add_argument("--mode", choices=("specialized", "parametric"), default="specialized")
    ap.add_argument("--timeout", type=float, default=None,
                    help="seconds before a Groebner computation gives up (exit 3)")
    return ap


def _matrix(args, F: Field) -> StructureMatrix:
    if not args.matrix:
        raise InputError(f"{args.command} needs --matrix")
    return StructureMatrix.parse(F, args.matrix)


def _pform(text: str | None, F: Field) -> BilinearForm:
    if not text:
        raise InputError("urep needs --p")
    parts = [s.strip() for s in text.split(",") if s.strip()]
    if all("=" in s for s in parts):
        terms = {}
        for s in parts:
            k, v = s.split("=", 1)
            terms[k.strip()] = F(F.parse(v.strip()))
        return BilinearForm.from_dict(terms)
    if len(parts) != 8:
        raise InputError("--p needs 8 coefficients or name=value terms")
    return BilinearForm(tuple(F(F.parse(s)) for s in parts))


def cmd_classify(args, F):
    cf = classify(_matrix(args, F))
    return Report(cf.to_json(), text=cf.name())


def cmd_square(args, F):
    M = _matrix(args, F)
    sq = square_of(M)
    data = {"square": sq.sorted_labels()}
    if args.check_brute_force:
        data["oracle"] = "match" if brute_force_square(M) == sq else "mismatch"
    text = f"{sq} ({sq.name})\n{render(sq, 'ascii')}"
    return Report(data, text=text, dot=render(sq, "dot"))


def cmd_aut(args, F):
    M = _matrix(args, F)
    G = automorphism_group(M)
    data = G.to_json()
    if args.check_brute_force:
        brute = brute_force_automorphisms(M)
        same = G.elements is not None and {m.to_strings().__str__() for m in brute} == {
            m.to_strings().__str__() for m in G.elements}
        data["oracle"] = "match" if same else "mismatch"
    return Report(data)


def cmd_der(args, F):
    return Report(derivation_space(_matrix(args, F)).to_json())


def cmd_identities(args, F):
    M = _matrix(args, F)
    if args.identity:
        if args.identity not in NAMED_IDENTITIES:
            raise InputError(f"unknown identity {args.identity!r}")
        return Report({"identity": args.identity, "holds": check_identity(M, args.identity)})
    if args.degree not in (3, 4):
        raise InputError("--degree must be 3 or 4")
    basis = identity_space(M, args.degree)
    return Report({"dim": len(basis), "basis": [lambda_str(v) for v in basis]})


def cmd_ideals(args, F):
    return Report(ideals_report(_matrix(args, F)))


def _config(args) -> GBConfig:
    return GBConfig(max_seconds=args.timeout)


def cmd_urep(args, F):
    M = _matrix(args, F)
    p = _pform(args.pform, F)
    if args.commutative:
        return Report(commutative_universal(M, p, config=_config(args)).to_json())
    gens = universal_presentation(M, p)
    gb = nc_groebner(gens, args.bound, max_seconds=args.timeout)
    letters = {nm: not nc_normal_form(gb.alg.letter(nm), gb) for nm in "xyzt"}
    return Report({"generators": [str(g) for g in gens],
                   "basis": [str(g) for g in gb.elements],
                   "complete_below": gb.complete_below,
                   "whole": gb.is_whole(), "letters_in_ideal": letters})


def cmd_search_rep(args, F):
    return Report(search_rep_2dim(_matrix(args, F), _config(args)).to_json())


def cmd_appendix(args, F):
    name = args.system or ""
    if args.commutative:
        if name not in ("A3", "A4", "A5ab"):
            raise InputError("--system must be A3, A4 or A5ab")
        cert = nonexistence_commutative(name, mode=args.mode, samples=args.samples,
                                        seed=args.seed, config=_config(args))
        return Report(cert.to_json())
    key = name if name.startswith("appendix-") else f"appendix-{name}"
    if key not in APPENDIX_SYSTEMS:
        raise InputError(f"--system must be one of {sorted(APPENDIX_SYSTEMS)}")
    res = verify_appendix(key, mode=args.mode, samples=args.samples, seed=args.seed,
                          degree_bound=args.bound, max_seconds=args.timeout)
    return Report(res.to_json())


def census(F: Field) -> list:
    """Isomorphism classes of all structure matrices over a finite field."""
    counts = Counter()
    names = {}
    for m in all_matrices(F):
        cf = classify(StructureMatrix(m))
        key = (cf.label,) + tuple(str(p) for p in cf.params)
        counts[key] += 1
        names[key] = cf.name()
    order = sorted(counts, key=lambda k: (int(k[0][1]), k))
    return [{"class": names[k], "label": k[0], "params": list(k[1:]), "count": counts[k]}
            for k in order]


def cmd_census(args, F):
    if F.characteristic == 0 or getattr(F, "params", None):
        raise InputError("census needs a prime field")
    rows = census(F)
    per_label = Counter(r["label"] for r in rows)
    data = {"field": str(F), "total": sum(r["count"] for r in rows), "classes": rows,
            "classes_per_label": dict(sorted(per_label.items()))}
    text = "\n".join(f"{r['class']:<24}{r['count']:>6}" for r in rows)
    text += f"\n{'total':<24}{data['total']:>6}"
    return Report(data, text=text)


HANDLERS = {
    "classify": cmd_classify, "square": cmd_square, "aut": cmd_aut, "der": cmd_der,
    "identities": cmd_identities, "ideals": cmd_ideals, "urep": cmd_urep,
    "search-rep": cmd_search_rep, "appendix-verify": cmd_appendix, "census": cmd_census,
}


def run(argv, out=None, err=None) -> int:
    """Execute one request; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.batch:
        return run_batch(sys.stdin, out, err)
    if args.command is None:
        parser.print_usage(err)
        return EXIT_INPUT
    try:
        F = parse_field(args.field)
        rep = HANDLERS[args.command](args, F)
    except ResourceLimit as exc:
        print(dumps({"error": "resource limit", "detail": str(exc)}), file=err)
        return EXIT_RESOURCE
    except (ValueError, KeyError) as exc:
        print(dumps({"error": "input", "detail": str(exc)}), file=err)
        return EXIT_INPUT
    print(rep.render(args.format), file=out)
    return EXIT_OK


def run_batch(stream, out=None, err=None) -> int:
    """One request per line (blank lines and # comments skipped); worst exit code wins."""
    code = EXIT_OK
    for line in stream:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code = max(code, run(shlex.split(line), out, err))
    return code


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
