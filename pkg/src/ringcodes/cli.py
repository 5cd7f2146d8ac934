"""Command line front end.

Exit codes: 0 success, 1 verification/assertion failure, 2 usage error,
3 infeasible enumeration (oracle bound exceeded).  All output is
deterministic for a fixed invocation and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .census import (
    render_census_figures,
    run_census,
    write_census_csv,
    write_census_json,
)
from .codefiles import code_to_dict, load_code, save_code
from .constacyclic import (
    ConstacyclicCode,
    constacyclic_dual,
    constacyclic_intersection,
    constacyclic_lcd_check,
    modulus_factors,
    parse_tower_label,
    support_poly,
)
from .eaqec import eaqec_from_constacyclic_pair
from .errors import (
    CanonicalizationMismatch,
    ClosureTooLarge,
    RingCodesError,
    UsageError,
    VerificationFailed,
)
from .gray import gray_image_code, min_weight
from .linalg import _BOUND_ENV, code_sum, dual, hull, intersect, is_free, rk_r
from .pairs import analyze_pair
from .polys import Poly
from .rings import loewy_invariants, ring
from .verify import SUITES, run_suite

SCHEMA_VERSION = "1"


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        payload = {"version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        for line in text_lines:
            print(line)


def cmd_ring_info(args) -> int:
    r = ring(args.spec)
    lines = [f"ring {r.spec()}", f"|R| = {r.size}"]
    payload = {"command": "ring-info", "ring": r.spec(), "size": r.size}
    if r.is_local:
        mu = loewy_invariants(r)
        units = len(r.units())
        lines += [
            f"q = {r.q}, t = {r.t}, omega = {r.omega}",
            f"loewy = {mu}",
            f"units = {units}",
        ]
        payload.update(q=r.q, t=r.t, omega=r.omega, loewy=list(mu), units=units)
        if r.is_chain:
            lines.append(f"gamma = {r.str_element(r.gamma)}")
            payload["gamma"] = r.str_element(r.gamma)
        elif hasattr(r, "gens"):
            gens = [r.str_element(g) for g in r.gens]
            lines.append(f"maximal ideal generators = {gens}")
            payload["maximal_ideal_generators"] = gens
    else:
        comps = [c.spec() for c in r.components]
        lines.append(f"components = {comps}")
        payload["components"] = comps
    _emit(payload, args.format, lines)
    return 0


def cmd_code(args) -> int:
    c = load_code(args.code)
    if args.action == "info":
        result = c
    elif args.action == "dual":
        result = dual(c, method=args.method)
    elif args.action == "hull":
        result = hull(c)
    elif args.action in ("intersect", "sum"):
        if not args.other:
            raise UsageError(f"code {args.action} needs a second code file")
        d = load_code(args.other)
        result = intersect(c, d) if args.action == "intersect" else code_sum(c, d)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown code action {args.action}")
    dim = result.dim()
    lines = [
        f"ring {result.ring.spec()}, n = {result.n}",
        f"|C| = {result.size}",
        f"dim = {dim}",
    ]
    payload = {
        "command": f"code-{args.action}",
        "ring": result.ring.spec(),
        "n": result.n,
        "size": result.size,
        "dim": dim if isinstance(dim, int) else str(dim),
    }
    if result.ring.is_local:
        rank = rk_r(result)
        lines.append(f"rank = {rank}, free = {is_free(result)}")
        payload.update(rank=rank, free=is_free(result))
    if args.out:
        save_code(args.out, result)
        lines.append(f"wrote {args.out}")
        payload["out"] = str(args.out)
    else:
        payload["generators"] = code_to_dict(result)["generators"]
    _emit(payload, args.format, lines)
    return 0


def cmd_dlip(args) -> int:
    c = load_code(args.code1)
    d = load_code(args.code2)
    rep = analyze_pair(c, d)
    doc = rep.to_dict()
    lines = [
        f"ring {rep.ring}, n = {rep.n}",
        f"ell = dim(C1 and C2) = {rep.ell}",
        f"dims = {rep.dims}",
        f"rank G1 = {rep.rank_g1}, rank G2 = {rep.rank_g2}, stacked = {rep.rank_stacked}",
        f"rank H2 G1^T = {rep.rank_h2_g1t}, rank H1 G2^T = {rep.rank_h1_g2t}",
        f"rank criterion: {rep.rank_h2_g1t} = {rep.rank_g1} - {rep.ell} "
        f"or {rep.rank_h1_g2t} = {rep.rank_g2} - {rep.ell}",
        f"flags: lcd_pair = {rep.is_lcd_pair}, lcp = {rep.is_lcp}, covers = {rep.covers_space}",
    ]
    _emit({"command": "dlip", **doc}, args.format, lines)
    return 0


def _constacyclic_inputs(args):
    r = ring(args.ring)
    lam = r.parse_element(args.lam)
    return r, args.n, lam


def _tower_from_arg(r, n, lam, text, unchecked):
    text = text.strip()
    if text.startswith("poly:"):
        if not unchecked:
            raise UsageError("raw polynomial towers require --unchecked")
        coeff_lists = json.loads("[" + text[len("poly:") :] + "]")
        tower = [Poly.from_coeffs(r, c) for c in coeff_lists]
        return ConstacyclicCode.from_tower(r, n, lam, tower)
    return parse_tower_label(r, n, lam, text)


def _factored_form(cc: ConstacyclicCode) -> list[str]:
    """Generators as gamma-power times the factored divisor product."""
    r = cc.ring
    factors = modulus_factors(r, cc.n, cc.lam)
    out = []
    for j, s in enumerate(cc.supports):
        if len(s) == len(factors):
            continue  # the modulus itself: zero generator
        parts = []
        if j > 0:
            parts.append(r.str_element(r.gamma_pow(j)))
        parts.extend(f"({factors[i]})" for i in sorted(s))
        out.append("*".join(parts) if parts else "1")
    return out


def cmd_constacyclic(args) -> int:
    r, n, lam = _constacyclic_inputs(args)
    lam_s = r.str_element(lam)
    if args.action == "factor":
        factors = modulus_factors(r, n, lam)
        lines = [f"x^{n} - {lam_s} over {r.spec()}:"]
        lines += [f"  [{i}] {f}" for i, f in enumerate(factors)]
        _emit(
            {
                "command": "constacyclic-factor",
                "ring": r.spec(),
                "n": n,
                "lambda": lam_s,
                "factors": [str(f) for f in factors],
            },
            args.format,
            lines,
        )
        return 0

    c1 = _tower_from_arg(r, n, lam, args.c1, args.unchecked)
    if args.action == "build":
        code = c1.code()
        lines = [
            f"tower {c1.label()}: dim = {c1.dim()}, |C| = {code.size}",
            "generators: " + ", ".join(_factored_form(c1)),
        ]
        payload = {
            "command": "constacyclic-build",
            "ring": r.spec(),
            "n": n,
            "lambda": lam_s,
            "tower": c1.label(),
            "dim": c1.dim(),
            "size": code.size,
        }
        if args.out:
            save_code(args.out, code)
            lines.append(f"wrote {args.out}")
            payload["out"] = str(args.out)
        _emit(payload, args.format, lines)
        return 0
    if args.action == "dual":
        d = constacyclic_dual(c1, check=not args.no_check)
        lines = [
            f"dual tower {d.label()} over lambda^-1 = {r.str_element(d.lam)}",
            f"dim = {d.dim()}, |C| = {d.code().size}",
            "generators: " + ", ".join(_factored_form(d)),
        ]
        _emit(
            {
                "command": "constacyclic-dual",
                "ring": r.spec(),
                "n": n,
                "lambda": lam_s,
                "tower": c1.label(),
                "dual_tower": d.label(),
                "dual_lambda": r.str_element(d.lam),
                "dim": d.dim(),
            },
            args.format,
            lines,
        )
        return 0
    if args.action == "intersect":
        if not args.c2:
            raise UsageError("constacyclic intersect needs --c2")
        c2 = _tower_from_arg(r, n, lam, args.c2, args.unchecked)
        inter, ell = constacyclic_intersection(c1, c2, check=not args.no_check)
        lines = [
            f"intersection tower {inter.label()}",
            "generators: " + ", ".join(_factored_form(inter)),
            f"ell = {ell}",
        ]
        _emit(
            {
                "command": "constacyclic-intersect",
                "ring": r.spec(),
                "n": n,
                "lambda": lam_s,
                "tower1": c1.label(),
                "tower2": c2.label(),
                "intersection": inter.label(),
                "generators": _factored_form(inter),
                "ell": ell,
            },
            args.format,
            lines,
        )
        return 0
    if args.action == "lcd":
        divisor = support_poly(r, n, lam, c1.supports[0])
        verdict = constacyclic_lcd_check(r, n, lam, divisor, check=not args.no_check)
        lines = [f"divisor {divisor}", f"lcd = {verdict}"]
        _emit(
            {
                "command": "constacyclic-lcd",
                "ring": r.spec(),
                "n": n,
                "lambda": lam_s,
                "divisor": str(divisor),
                "lcd": verdict,
            },
            args.format,
            lines,
        )
        return 0
    raise UsageError(f"unknown constacyclic action {args.action}")  # pragma: no cover


def cmd_gray(args) -> int:
    c = load_code(args.code)
    img = gray_image_code(c)
    w = min_weight(c, "gray") if c.size > 1 else None
    lines = [
        f"source: {c.ring.spec()}, n = {c.n}, dim = {c.dim()}",
        f"image: F_{img.ring.q}, length {img.n}, dim = {img.dim()}",
        f"min gray weight = {w}",
    ]
    payload = {
        "command": "gray",
        "ring": c.ring.spec(),
        "n": c.n,
        "dim": c.dim(),
        "image_length": img.n,
        "image_dim": img.dim(),
        "min_gray_weight": w,
    }
    if args.out:
        save_code(args.out, img)
        lines.append(f"wrote {args.out}")
        payload["out"] = str(args.out)
    _emit(payload, args.format, lines)
    return 0


def cmd_eaqec(args) -> int:
    r, n, lam = _constacyclic_inputs(args)
    c1 = _tower_from_arg(r, n, lam, args.c1, args.unchecked)
    c2 = _tower_from_arg(r, n, lam, args.c2, args.unchecked)
    params, report = eaqec_from_constacyclic_pair(c1, c2, check=not args.no_check)
    lines = [
        f"pair {c1.label()} / {c2.label()} over {r.spec()}, lambda = {r.str_element(lam)}",
        f"eaqec = {params}",
        f"tau = ({report.tau1}, {report.tau2});"
        f" degree-formula variant = ({report.formula_tau1}, {report.formula_tau2}),"
        f" matches = {report.matches}",
    ]
    _emit(
        {
            "command": "eaqec",
            "ring": r.spec(),
            "n": n,
            "lambda": r.str_element(lam),
            "tower1": c1.label(),
            "tower2": c2.label(),
            "params": params.to_dict(),
            "tau": [report.tau1, report.tau2],
            "formula_tau": [report.formula_tau1, report.formula_tau2],
        },
        args.format,
        lines,
    )
    return 0


def cmd_census(args) -> int:
    r = ring(args.ring)
    lams = [r.parse_element(x) for x in args.lam.split(",")]
    rows = run_census(r, args.n, lams, include_eaqec=not args.no_eaqec, check=args.check)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / "census.csv"
    write_census_csv(rows, csv_path)
    json_path = outdir / "census.json"
    write_census_json(rows, json_path)
    written = [str(csv_path), str(json_path)]
    if not args.no_plot:
        written += render_census_figures(rows, outdir)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "version": SCHEMA_VERSION,
                    "command": "census",
                    "rows": len(rows),
                    "files": written,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"census: {len(rows)} rows over {r.spec()}, n = {args.n}")
        for path in written:
            print(f"wrote {path}")
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, trials=args.trials)
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "version": SCHEMA_VERSION,
                    "command": "verify",
                    "suite": args.suite,
                    "seed": args.seed,
                    "ok": ok,
                    "checks": [
                        {
                            "name": r.name,
                            "ok": r.ok,
                            "cases": r.cases,
                            "detail": r.detail,
                        }
                        for r in results
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.line())
        passed = sum(1 for r in results if r.ok)
        print(f"{passed}/{len(results)} checks passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringcodes",
        description="Exact code algebra over finite commutative rings",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument("--bound", type=int, help="override the oracle element bound")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ring-info", help="inspect a ring spec")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_ring_info)

    p = sub.add_parser("code", help="operations on code files")
    p.add_argument("action", choices=("info", "dual", "hull", "intersect", "sum"))
    p.add_argument("code")
    p.add_argument("other", nargs="?", help="second code file for intersect/sum")
    p.add_argument("--method", choices=("auto", "oracle", "structured"), default="auto")
    p.add_argument("--out", help="write the resulting code file here")
    p.set_defaults(fn=cmd_code)

    p = sub.add_parser("dlip", help="analyze an intersection pair of code files")
    p.add_argument("code1")
    p.add_argument("code2")
    p.set_defaults(fn=cmd_dlip)

    p = sub.add_parser("constacyclic", help="constacyclic towers over a chain ring")
    p.add_argument("action", choices=("factor", "build", "dual", "intersect", "lcd"))
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--c1", help="tower, e.g. D0=1,2;D1=2")
    p.add_argument("--c2")
    p.add_argument("--unchecked", action="store_true", help="allow poly:[...] towers")
    p.add_argument("--no-check", action="store_true", help="skip oracle assertions")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_constacyclic)

    p = sub.add_parser("gray", help="Gray image of a code over F_q[gamma]")
    p.add_argument("code")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gray)

    p = sub.add_parser("eaqec", help="quantum code parameters from a tower pair")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--unchecked", action="store_true")
    p.add_argument("--no-check", action="store_true")
    p.set_defaults(fn=cmd_eaqec)

    p = sub.add_parser("census", help="sweep all tower pairs; csv + figures")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated list")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--no-eaqec", action="store_true")
    p.add_argument("--no-plot", action="store_true")
    p.add_argument("--check", action="store_true", help="run oracle assertions per row")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", help=f"one of {sorted(SUITES)} or all")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound is not None:
        os.environ[_BOUND_ENV] = str(args.bound)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ClosureTooLarge as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (VerificationFailed, CanonicalizationMismatch) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except RingCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
