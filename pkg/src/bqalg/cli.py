"""Command-line front end; every command prints one JSON document.

Exit codes: 0 success, 1 a negative verdict (inconsistent input, family
not covered, a failing selftest suite), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .classify import classify2, classify3
from .consistency3 import RESIDUE_LABELS, Bq3, residues
from .field import QQ, field_from_spec
from .fileformat import FileFormatError, read_presentation
from .freealg import ExprSyntaxError, parse_expr
from .orbits import orbit_invariant, representative
from .rewrite import InconsistentPresentation, overlap_check, reduce, reduce_in_order
from .structure import NotCovered, structure_report
from .transform import TransformError, apply, parse_transform

COMMANDS = ("check", "reduce", "classify", "orbit", "structure", "selftest")


class InputError(ValueError):
    """Bad command-line input; reported with exit code 2."""


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    field: str | None = None
    expr: str | None = None
    order: str | None = None
    case: int | None = None
    xi: str | None = None
    trials: int | None = None
    perm: str | None = None
    scale: str | None = None
    shift: str | None = None
    seed: int = 0


def _field(cfg: RunConfig):
    if cfg.field is None:
        return None
    try:
        return field_from_spec(cfg.field)
    except ValueError as e:
        raise InputError(str(e)) from None


def _load(cfg: RunConfig):
    if cfg.input is None:
        raise InputError(f"{cfg.command} needs an input file")
    P = read_presentation(cfg.input, _field(cfg))
    if cfg.perm or cfg.scale or cfg.shift:
        g = parse_transform(P.K, cfg.perm, cfg.scale, cfg.shift, n=P.n)
        P = apply(P, g)
    return P


def _permutation(text: str, n: int):
    digits = [c for c in text if c not in " ,"]
    if not all(c.isdigit() for c in digits) or sorted(int(c) for c in digits) != list(range(1, n + 1)):
        raise InputError(f"--order must be a permutation of 1..{n}, got {text!r}")
    return tuple(int(c) for c in digits)


def _overlaps(P):
    return [{"triple": "".join(str(i) for i in r.triple), "difference": r.difference.render()}
            for r in overlap_check(P)]


def cmd_check(cfg):
    P = _load(cfg)
    out = {"n": P.n, "field": P.K.spec}
    overlaps = _overlaps(P)
    if P.n == 3:
        res = residues(Bq3.from_presentation(P))
        out["residues"] = {k: str(v) for k, v in res.as_dict().items()}
        consistent = res.all_zero()
        # the explicit criterion and the overlap check must agree
        assert consistent == (not overlaps)
    else:
        consistent = not overlaps
    out = {"consistent": consistent, **out, "overlaps": overlaps}
    return (0 if consistent else 1), out


def cmd_reduce(cfg):
    P = _load(cfg)
    if cfg.expr is None:
        raise InputError("reduce needs --expr")
    f = parse_expr(cfg.expr, P.n, P.K)
    out = {"input": f.render()}
    if cfg.order:
        order = _permutation(cfg.order, P.n)
        out["order"] = "".join(str(i) for i in order)
        try:
            g = reduce_in_order(f, P, order)
        except InconsistentPresentation as e:
            return 1, {**out, "consistent": False, "error": str(e)}
    else:
        g = reduce(f, P)
    out["normal_form"] = g.render()
    return 0, out


def cmd_classify(cfg):
    P = _load(cfg)
    if P.n == 2:
        (a, b), = P.a
        return 0, classify2(P.q[0], a, b, P.b[0], P.K).as_dict()
    if P.n != 3:
        raise InputError("classification covers 2 and 3 generators only")
    A = Bq3.from_presentation(P)
    try:
        cf, _ = classify3(A)
    except InconsistentPresentation:
        return 1, {"consistent": False, "residues": {k: str(v) for k, v in residues(A).as_dict().items()}}
    return 0, cf.as_dict()


def cmd_structure(cfg):
    P = _load(cfg)
    if P.n != 3:
        raise InputError("structure needs a 3-generator presentation")
    A = Bq3.from_presentation(P)
    try:
        cf, _ = classify3(A)
    except InconsistentPresentation:
        return 1, {"consistent": False, "covered": False}
    try:
        rep = structure_report(cf)
    except NotCovered as e:
        return 1, {"family": cf.family, "covered": False, "reason": str(e)}
    out = {"family": rep.pop("family"), "covered": True, **rep}
    return (0 if out["verified"] else 1), out


def cmd_orbit(cfg):
    K = _field(cfg) or QQ
    if cfg.case is None or cfg.xi is None:
        raise InputError("orbit needs --case and --xi")
    if cfg.case not in (1, 2, 3, 4):
        raise InputError(f"--case must be 1-4, got {cfg.case}")
    parts = cfg.xi.split(",")
    if len(parts) != 3:
        raise InputError(f"--xi needs three comma-separated values, got {cfg.xi!r}")
    try:
        xi = tuple(K.parse(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(str(e)) from None
    rep, t = representative(cfg.case, xi, K)
    return 0, {
        "case": cfg.case,
        "field": K.spec,
        "xi": [str(x) for x in xi],
        "invariant": orbit_invariant(cfg.case, xi, K).as_dict(),
        "representative": [str(x) for x in rep],
        "torus": [str(x) for x in t],
    }


def cmd_selftest(cfg):
    from .suites import selftest

    results = selftest(trials=cfg.trials, field=_field(cfg), seed=cfg.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    return (0 if ok else 1), {"passed": ok, "suites": [r.as_dict() for r in results]}


HANDLERS = {
    "check": cmd_check,
    "reduce": cmd_reduce,
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "structure": cmd_structure,
    "selftest": cmd_selftest,
}


def run(cfg: RunConfig):
    """Execute one command; returns (exit code, JSON-ready dict)."""
    try:
        return HANDLERS[cfg.command](cfg)
    except FileFormatError as e:
        return 2, {"error": e.msg, "source": e.source, "line": e.line, "column": e.col}
    except ExprSyntaxError as e:
        return 2, {"error": str(e), "source": "--expr", "line": 1, "column": e.pos + 1}
    except OSError as e:
        return 2, {"error": f"cannot read {e.filename}: {e.strerror}"}
    except (InputError, TransformError, ValueError) as e:
        return 2, {"error": str(e)}


def render_json(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bqalg", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"bqalg {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="presentation file (.bqa)")
        p.add_argument("--field", help='"Q" or "fp:<prime>"; overrides the file')
        p.add_argument("--json-pretty", action="store_true", help="indent the JSON output")

    def transform_flags(p):
        p.add_argument("--perm", help='new generator order, e.g. "132"')
        p.add_argument("--scale", help='scalars, e.g. "1,2,1/3"')
        p.add_argument("--shift", help='shifts, e.g. "0,0,1"')

    p = sub.add_parser("check", help="PBW consistency with the ten residues")
    common(p)
    transform_flags(p)
    p = sub.add_parser("reduce", help="normal form of an expression")
    common(p)
    transform_flags(p)
    p.add_argument("--expr", required=True, help='e.g. "x3*x2*x1 - 2*x1^2"')
    p.add_argument("--order", help='generator order for the normal form, e.g. "213"')
    p = sub.add_parser("classify", help="canonical form and transform trace")
    common(p)
    transform_flags(p)
    p = sub.add_parser("structure", help="diskew polynomial and generalized Weyl data")
    common(p)
    transform_flags(p)
    p = sub.add_parser("orbit", help="torus orbit invariant and representative")
    common(p, with_input=False)
    p.add_argument("--case", type=int, required=True)
    p.add_argument("--xi", required=True, help='three values, e.g. "1,2,0"')
    p = sub.add_parser("selftest", help="run the property suites")
    common(p, with_input=False)
    p.add_argument("--trials", type=int, help="trials per randomized suite")
    p.add_argument("--seed", type=int, default=0)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    opts = vars(args)
    pretty = opts.pop("json_pretty", False)
    cfg = RunConfig(**{k: v for k, v in opts.items() if k in RunConfig.__dataclass_fields__})
    code, out = run(cfg)
    print(render_json(out, pretty))
    if code == 2:
        print(f"bqalg: {out.get('error')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
