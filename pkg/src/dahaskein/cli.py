"""``daha`` command line: verification suites and polynomial computations.

Exit codes: 0 success, 1 a check failed, 2 usage or internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import a1, cc1, knots, verify
from . import orthopoly as op
from .exact import RatFun, as_ratfun, substitute, to_json, to_text, var, vpow

SCHEMA = 1

ALIASES = {"xu": "x_u", "xd": "x_d", "xl": "x_l", "xr": "x_r"}
BASES = {"v": 1, "qu": 2, "q": 4}
_VALUE = re.compile(r"^(?P<sign>[+-]?)(?P<inv>1/)?(?P<base>v|qu|q|t|x)?(?:\^\(?(?P<exp>-?\d+)\)?)?$")


class UsageError(ValueError):
    pass


def parse_value(text: str) -> RatFun:
    """A signed monomial such as ``qu``, ``-q^2``, ``1/qu``, ``v^-3``, or a rational number."""
    text = text.strip().replace(" ", "")
    try:
        return as_ratfun(Fraction(text))
    except ValueError:
        pass
    m = _VALUE.match(text)
    if not m or not m.group("base"):
        raise UsageError(f"cannot parse value {text!r}")
    base = m.group("base")
    exp = int(m.group("exp") or 1)
    val = vpow(BASES[base] * exp) if base in BASES else var(base) ** exp
    if m.group("inv"):
        val = val.inverse()
    return -val if m.group("sign") == "-" else val


def parse_specialization(text: str | None) -> dict[str, RatFun]:
    if not text:
        return {}
    out = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise UsageError(f"expected name=value in {piece!r}")
        name, value = piece.split("=", 1)
        name = ALIASES.get(name.strip(), name.strip())
        out[name] = parse_value(value)
    return out


def _family(text: str) -> tuple[int, int]:
    table = {"12": (1, 2), "13": (1, 3), "1,2": (1, 2), "1,3": (1, 3)}
    if text not in table:
        raise UsageError(f"unknown family {text!r}; use 12 or 13")
    return table[text]


def _slope(text: str) -> tuple[int, int]:
    try:
        r, s = (int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"expected a slope r,s, got {text!r}") from None
    return r, s


def _sphere_family(text: str):
    if text in ("1,2k", "1,2k+1", "2k,1", "2k+1,1"):
        return text
    return _slope(text)


# ---------------------------------------------------------------------------
# compute


def compute(args) -> tuple[RatFun, dict]:
    kind = args.kind
    if kind == "macdonald":
        if args.nonsymmetric:
            return op.nonsym_macdonald_a1(args.n), {"m": args.n, "nonsymmetric": True}
        return op.macdonald_a1(args.n), {"n": args.n}
    if kind == "askey-wilson":
        return op.askey_wilson(args.n), {"m": args.n}
    if kind == "torus-poly":
        r, s = _slope(args.slope)
        w = a1.curve_word(r, s)
        return a1.daha_poly_torus(args.n, w, a1.build_a1("x", 4)), {"n": args.n, "slope": [r, s]}
    if kind == "sphere-poly":
        fam = _sphere_family(args.family)
        w = cc1.curve_word(fam, args.k)
        return cc1.daha_poly_sphere(args.n, w, cc1.build_cc1()), {"n": args.n, "family": args.family, "k": args.k}
    if kind == "reduced":
        fam = _family(args.family)
        f = knots.reduced_daha_poly(args.n, fam, (args.k, args.l))
        return f, {"n": args.n, "family": list(fam), "k": args.k, "l": args.l}
    if kind == "jones-torus":
        s, t = _slope(args.slope)
        return knots.jones_torus(args.n, s, t), {"n": args.n, "torus": [s, t]}
    if kind == "jones-twist":
        return knots.jones_twist(args.n, args.p), {"n": args.n, "p": args.p}
    if kind == "conjecture":
        return knots.conjecture_closed_form(args.n, args.k, args.l), {"n": args.n, "k": args.k, "l": args.l}
    raise UsageError(f"unknown kind {kind!r}")


def cmd_compute(args) -> int:
    f, meta = compute(args)
    spec = parse_specialization(getattr(args, "specialize", None))
    if spec:
        f = substitute(f, spec)
        meta["specialize"] = {k: to_text(v) for k, v in sorted(spec.items())}
    if args.format == "json":
        doc = {"schema": SCHEMA, "kind": args.kind, "args": meta, "result": to_json(f), "text": to_text(f)}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(to_text(f))
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    suites = [args.suite] if args.suite != "all" else list(verify.SUITES)
    options = verify.Options(max_n=args.max_n, max_k=args.max_k, fixtures=args.fixtures)
    results = verify.run_suites(suites, options, parallel=args.parallel, workers=args.workers)
    doc = verify.report(results, options, suites)
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for r in results:
            extra = f"  ({r.detail})" if r.detail else ""
            print(f"{r.status:4s} {r.seconds:8.3f}s  {r.suite}: {r.name}{extra}")
        s = doc["summary"]
        print(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
    return 1 if doc["summary"]["fail"] else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="daha", description="DAHA polynomials and skein-algebra checks")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--max-k", type=int, default=2)
    v.add_argument("--parallel", action="store_true")
    v.add_argument("--workers", type=int, default=None)
    v.add_argument("--fixtures", default=None, help="JSON file of colored Jones values")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="compute one polynomial")
    kinds = c.add_subparsers(dest="kind", required=True)

    def kind(name, help_):
        p = kinds.add_parser(name, help=help_)
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--specialize", default=None, help="e.g. xu=qu,xd=qu or x=-q,t=-q")
        p.set_defaults(func=cmd_compute)
        return p

    p = kind("macdonald", "A1 Macdonald polynomial M_n (or E_n with --nonsymmetric)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nonsymmetric", action="store_true")
    p = kind("askey-wilson", "monic Askey-Wilson polynomial P_n")
    p.add_argument("--n", type=int, required=True)
    p = kind("torus-poly", "DAHA polynomial P_n of a torus curve")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--slope", default="3,2", help="r,s")
    p = kind("sphere-poly", "DAHA polynomial P_n on the four-punctured sphere")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", default="1,1", help="r,s or one of 1,2k 1,2k+1 2k,1 2k+1,1")
    p.add_argument("--k", type=int, default=0)
    p = kind("reduced", "reduced DAHA polynomial of a genus-two curve")
    p.add_argument("--family", default="12")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p = kind("jones-torus", "colored Jones polynomial of a torus knot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--slope", default="3,2", help="s,t")
    p = kind("jones-twist", "colored Jones polynomial of the twist knot K_p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = kind("conjecture", "closed-form reduced polynomial for the (1,2) family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"daha: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"daha: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
