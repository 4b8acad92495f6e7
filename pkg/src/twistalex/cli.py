"""Command line interface.

Exit status is 0 on success, 1 for invalid input and 2 when a computed
invariant fails its own consistency checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import IntPoly, LaurentPoly, RingElement
from .contfrac import even_cf, enumerate_hp, is_p_admissible, p_expansion, to_p_expansion, validate_rational
from .errors import InternalVerificationFailure, TwistAlexError
from .mu import mu_with_trace, theorem_a_check
from .parabolic import chi, chi_tower, rep_poly
from .total import silver_williams_check, total_from_twisted, total_twisted
from .twisted import lambda_poly, twisted_alexander


def _ring_json(x: RingElement) -> list[int]:
    return list(x.c)


def _laurent_json(f: LaurentPoly) -> dict:
    return {"low": f.low, "coeffs": [list(c) for c in f.coeffs], "text": f.format()}


def _poly_json(f: IntPoly, var: str = "t") -> dict:
    return {"coeffs": list(f.coeffs), "text": f.format(var)}


def _parse_theta(text: str | None) -> IntPoly | None:
    if text is None:
        return None
    text = text.strip()
    if text.startswith("chi:"):
        return chi(int(text[4:]))
    try:
        return IntPoly(int(c) for c in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot read polynomial {text!r}") from exc


def _knot(text: str, p: int):
    """A rational, or a bracketed p-expansion such as ``[3,-4,3,2,3]``."""
    if text.strip().startswith("["):
        return p_expansion(text, p)
    return validate_rational(text)


def _rational(text: str, p: int) -> Fraction:
    k = _knot(text, p)
    return k if isinstance(k, Fraction) else k.value()


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def _verify_payload(report, total) -> dict:
    lam = report.lam
    delta = report.delta
    sw = silver_williams_check(total)
    return {
        "r": str(report.r),
        "p": report.p,
        "q": report.q,
        "modulus": list(delta.ring.modulus.coeffs),
        "delta": _laurent_json(delta.delta),
        "lambda": _laurent_json(lam.poly),
        "at_1": {"delta": _ring_json(delta.at(1)), "lambda": _ring_json(lam.raw.evaluate(1))},
        "at_neg1": {"delta": _ring_json(delta.at(-1)), "lambda": _ring_json(lam.raw.evaluate(-1))},
        "mu": _ring_json(report.mu),
        "theorem_a": {"ok": report.ok, "epsilon": report.epsilon, "checks": report.checks},
        "total": {
            "D": _poly_json(total.D),
            "d": total.d,
            "at_1": total.at_1,
            "at_neg1": total.at_neg1,
            "sw": {"pow2_ok": sw.pow2_ok, "N": sw.N, "ok": sw.ok},
        },
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(args) -> int:
    r = validate_rational(args.r)
    ecf = even_cf(r)
    payload = {"r": str(r), "even": list(ecf.entries)}
    lines = [f"even: {ecf}"]
    if args.p is not None:
        pe = to_p_expansion(r, args.p)
        payload.update(p=args.p, expansion=list(pe.entries), k=list(pe.ks), m=list(pe.ms))
        lines.append(f"{args.p}-expansion: {pe}")
    _emit(args, payload, lines)
    return 0


def cmd_admissible(args) -> int:
    r = validate_rational(args.r)
    ok = is_p_admissible(r, args.p)
    _emit(args, {"r": str(r), "p": args.p, "admissible": ok}, ["yes" if ok else "no"])
    return 0


def cmd_reppoly(args) -> int:
    a = rep_poly(args.r)
    _emit(args, {"r": args.r, "reppoly": _poly_json(a, "z")}, [a.format("z")])
    return 0


def cmd_chi(args) -> int:
    tower = chi_tower(args.q)
    payload = {"q": args.q, "chi": {str(u): list(f.coeffs) for u, f in tower.items()}}
    lines = [f"chi_{u} = {f.format('z')}" for u, f in tower.items()]
    _emit(args, payload, lines)
    return 0


def cmd_twisted(args) -> int:
    res = twisted_alexander(args.r, _parse_theta(args.theta))
    payload = {
        "r": str(res.r),
        "modulus": list(res.ring.modulus.coeffs),
        "delta": _laurent_json(res.delta),
        "at_1": _ring_json(res.at(1)),
        "at_neg1": _ring_json(res.at(-1)),
        "epsilon": res.sign_epsilon,
    }
    _emit(args, payload, [res.delta.format()])
    return 0


def cmd_lambda(args) -> int:
    lam = lambda_poly(_rational(args.r, args.p), args.p, args.q)
    payload = {
        "r": str(lam.r),
        "p": lam.p,
        "q": lam.q,
        "lambda": _laurent_json(lam.poly),
        "at_1": _ring_json(lam.raw.evaluate(1)),
        "at_neg1": _ring_json(lam.raw.evaluate(-1)),
    }
    _emit(args, payload, [lam.poly.format()])
    return 0


def _trace_lines(node, depth: int = 0) -> list[str]:
    pad = "  " * depth
    head = f"{pad}k={list(node.ks)} m={list(node.ms)} mu={node.value}"
    if node.M is None:
        return [head]
    out = [f"{head} M={node.M} nu={node.nu}"]
    for child in node.children:
        out.extend(_trace_lines(child, depth + 1))
    return out


def cmd_mu(args) -> int:
    value, node = mu_with_trace(_knot(args.r, args.p), args.p, args.q, trace=args.trace)
    payload = {"r": args.r, "p": args.p, "q": args.q or args.p, "mu": _ring_json(value)}
    lines = [str(value)]
    if args.trace:
        payload["trace"] = node.to_dict()
        lines = _trace_lines(node) + lines
    _emit(args, payload, lines)
    return 0


def cmd_total(args) -> int:
    res = total_twisted(args.r, _parse_theta(args.theta), args.route)
    sw = silver_williams_check(res)
    payload = {
        "r": str(res.r),
        "theta": list(res.theta.coeffs),
        "D": _poly_json(res.D),
        "d": res.d,
        "at_1": res.at_1,
        "at_neg1": res.at_neg1,
        "sw": {"pow2_ok": sw.pow2_ok, "N": sw.N},
    }
    _emit(args, payload, [res.D.format(), f"d={res.d} D(1)={res.at_1} D(-1)={res.at_neg1} N={sw.N}"])
    if not sw.ok:
        raise InternalVerificationFailure(f"total polynomial of {res.r} fails the 2^d N^2 check")
    return 0


def _check_knot(r, p: int, q: int | None):
    report = theorem_a_check(r, p, q)
    total = total_from_twisted(report.delta)
    payload = _verify_payload(report, total)
    ok = report.ok and payload["total"]["sw"]["ok"]
    return report, payload, ok


def cmd_verify(args) -> int:
    report, payload, ok = _check_knot(_rational(args.r, args.p), args.p, args.q)
    tot = payload["total"]
    lines = [
        f"delta  = {report.delta.delta}",
        f"lambda = {report.lam.poly}",
        f"lambda(-1) = {report.lam.raw.evaluate(-1)}",
        f"mu     = {report.mu}",
    ] + [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in report.checks.items()]
    lines.append(f"{'ok  ' if tot['sw']['ok'] else 'FAIL'} |D(1)| = 2^d, |D(-1)| = 2^d N^2"
                 f" (d={tot['d']}, N={tot['sw']['N']})")
    lines.append(f"theorem_a: {'pass' if report.ok else 'fail'}")
    _emit(args, payload, lines)
    return 0 if ok else 2


def cmd_scan(args) -> int:
    rows = []
    failed = 0
    for r in enumerate_hp(args.p, args.max_alpha):
        report, payload, ok = _check_knot(r, args.p, None)
        failed += not ok
        rows.append((report, payload, ok))
    if args.json:
        print(json.dumps({"p": args.p, "max_alpha": args.max_alpha, "failures": failed,
                          "rows": [payload for _, payload, _ in rows]}))
    else:
        print("r\tmu\tlambda(-1)\tN\tcheck")
        for rep, payload, ok in rows:
            print(f"{rep.r}\t{rep.mu}\t{rep.lam.raw.evaluate(-1)}\t{payload['total']['sw']['N']}\t"
                  f"{'ok' if ok else 'FAIL'}")
        print(f"{len(rows)} knots, {failed} failures")
    return 2 if failed else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistalex",
        description="Twisted Alexander polynomials of 2-bridge knots in H(p).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, r=True, p=False, p_required=True, q=False):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if r:
            sp.add_argument("r", help="rational beta/alpha such as 19/45, or a p-expansion such as [3,-4,3,2,3]")
        if p:
            sp.add_argument("--p", type=int, required=p_required)
        if q:
            sp.add_argument("--q", type=int, default=None, help="divisor of p (default p)")
        sp.set_defaults(func=func)
        return sp

    add("expand", cmd_expand, "even continued fraction and p-expansion", p=True, p_required=False)
    add("admissible", cmd_admissible, "membership in H(p)", p=True)
    add("reppoly", cmd_reppoly, "Riley polynomial a(z)")
    sp = add("chi", cmd_chi, "the chi_u tower for the divisors of q", r=False)
    sp.add_argument("q", type=int)
    sp = add("twisted", cmd_twisted, "twisted Alexander polynomial")
    sp.add_argument("--theta", help="modulus as comma-separated coefficients or chi:Q")
    add("lambda", cmd_lambda, "quotient by the torus knot polynomial", p=True, q=True)
    sp = add("mu", cmd_mu, "the invariant mu", p=True, q=True)
    sp.add_argument("--trace", action="store_true", help="show the recursion tree")
    sp = add("total", cmd_total, "total twisted Alexander polynomial")
    sp.add_argument("--theta", help="modulus as comma-separated coefficients or chi:Q")
    sp.add_argument("--route", choices=("psi", "reduced"), default="psi")
    add("verify", cmd_verify, "check Delta, lambda and mu against each other", p=True, q=True)
    sp = add("scan", cmd_scan, "enumerate H(p) and verify every knot", r=False, p=True)
    sp.add_argument("--max-alpha", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except InternalVerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (TwistAlexError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
