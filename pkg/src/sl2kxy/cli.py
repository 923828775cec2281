"""Command-line front end: ``python -m sl2kxy <command> ...``.

Exit codes: 0 success, 1 mathematical negative (not unimodular, verification
failed), 2 input outside scope, 3 syntax or configuration error, 4 resource
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from .cofactors import DEFAULT_STEP_BUDGET, cofactors, is_unimodular
from .canonical import canonicalize_quadratic
from .decompose import decompose, verify_certificate
from .endo import apply
from .errors import (BudgetExceeded, InternalDivisionFailure, NotSL2, NotUnimodular, ParseError,
                     PreconditionViolated, SqrtUnavailable, TowerDepthExceeded)
from .generate import FAMILIES, generate_random_instance
from .homog import alpha_sequence, verify_star
from .mat import Mat2, certificate_from_json, certificate_to_json, cohn_to_json, elem_to_json
from .parse import parse_poly
from .poly import Poly
from .reduce import trace_lines
from .scalar import depth_limit

EXIT_OK, EXIT_NEGATIVE, EXIT_SCOPE, EXIT_SYNTAX, EXIT_BUDGET = 0, 1, 2, 3, 4


class _Stdin:
    """Hands out stdin lines to arguments given as ``-``, in order."""

    def __init__(self, stream):
        self.stream = stream
        self.lines = None

    def take(self) -> str:
        if self.lines is None:
            self.lines = [ln for ln in self.stream.read().splitlines() if ln.strip()]
        if not self.lines:
            raise ParseError("stdin exhausted while reading a '-' argument")
        return self.lines.pop(0)


def _poly(text: str, stdin: _Stdin) -> Poly:
    return parse_poly(stdin.take() if text == "-" else text)


def _emit(args, payload: dict, text_lines: list[str], out) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for ln in text_lines:
            out.write(ln + "\n")


def _theta_json(theta) -> dict:
    return {"x": str(theta.img_x), "y": str(theta.img_y)}


def _matrix_args(args, stdin) -> Mat2:
    return Mat2(*(_poly(getattr(args, n), stdin) for n in ("a11", "a12", "a21", "a22")))


# commands

def cmd_check_unimodular(args, stdin, out) -> int:
    f, g = _poly(args.f, stdin), _poly(args.g, stdin)
    ok = is_unimodular(f, g, budget=args.max_steps)
    _emit(args, {"f": str(f), "g": str(g), "unimodular": ok},
          [f"({f}, {g}) is {'' if ok else 'not '}unimodular"], out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_cofactors(args, stdin, out) -> int:
    f, g = _poly(args.f, stdin), _poly(args.g, stdin)
    P, Q = cofactors(f, g, budget=args.max_steps, method=args.method)
    _emit(args, {"f": str(f), "g": str(g), "P": str(P), "Q": str(Q)},
          [f"P = {P}", f"Q = {Q}"], out)
    return EXIT_OK


def cmd_canonicalize(args, stdin, out) -> int:
    f = _poly(args.f, stdin)
    theta, form = canonicalize_quadratic(f)
    payload = {"f": str(f), "theta": _theta_json(theta), "form": form.tag,
               "gamma": None if form.gamma is None else str(Poly.const(form.gamma)),
               "canonical": str(form.poly())}
    _emit(args, payload, [str(theta), f"form: {form.tag}", f"theta(f) = {form.poly()}"], out)
    return EXIT_OK


def cmd_reduce_row(args, stdin, out) -> int:
    from .reduce import reduce_row
    f, g = _poly(args.f, stdin), _poly(args.g, stdin)
    theta, rc = reduce_row(f, g)
    row = (apply(theta, f), apply(theta, g))
    term = rc.terminal
    tjson = {"kind": term.kind}
    if term.kind == "CohnA":
        tjson.update(delta=str(Poly.const(term.delta)), psi=str(term.psi))
    elif term.kind == "CohnB":
        tjson.update(gamma=str(Poly.const(term.gamma)), k=term.k, scale=str(Poly.const(term.scale)),
                     in_y=term.in_y)
    end = rc.replay(row)
    payload = {"theta": _theta_json(theta), "row": [str(row[0]), str(row[1])],
               "steps": [elem_to_json(s) for s in rc.steps], "terminal": tjson,
               "result": [str(end[0]), str(end[1])]}
    lines = [str(theta), f"row = ({row[0]}, {row[1]})"]
    if args.trace:
        lines += trace_lines(row, rc.steps)
    lines.append(f"terminal: {term}")
    _emit(args, payload, lines, out)
    return EXIT_OK


def cmd_decompose(args, stdin, out) -> int:
    A = _matrix_args(args, stdin)
    d = decompose(A, trace=args.trace)
    cert = d.certificate
    payload = certificate_to_json(cert)
    if args.trace:
        payload["trace"] = d.trace
    lines = list(d.trace) if args.trace else []
    lines.append(str(cert.theta))
    lines.append("pre: " + " ".join(f"{e.side}({e.h})" for e in cert.pre))
    lines.append(f"cohn: {json.dumps(cohn_to_json(cert.cohn))}")
    lines.append("post: " + " ".join(f"{e.side}({e.h})" for e in cert.post))
    _emit(args, payload, lines, out)
    ok = verify_certificate(A, cert)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify(args, stdin, out) -> int:
    A = _matrix_args(args, stdin)
    if args.certificate == "-":
        raw = stdin.stream.read() if stdin.lines is None else "\n".join(stdin.lines)
    else:
        with open(args.certificate) as fh:
            raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}") from exc
    cert = certificate_from_json(data)
    verdict = verify_certificate(A, cert)
    diff = {k: str(v) for k, v in verdict.diff.items()}
    lines = ["certificate verified"] if verdict else \
        ["certificate does NOT verify"] + [f"  {k}: product - theta(A) = {v}" for k, v in diff.items()]
    _emit(args, {"ok": verdict.ok, "diff": diff}, lines, out)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_star(args, stdin, out) -> int:
    f, g = _poly(args.f, stdin), _poly(args.g, stdin)
    if args.P is not None and args.Q is not None:
        P, Q = _poly(args.P, stdin), _poly(args.Q, stdin)
    else:
        P, Q = cofactors(f, g, budget=args.max_steps)
    data = alpha_sequence(f, g, P, Q)
    ok = verify_star(data) and data.degrees_ok()
    payload = data.to_dict()
    payload.update(P=str(P), Q=str(Q), verified=ok)
    lines = [f"n = {data.n}, m = {data.m}, phi = {data.phi}"]
    lines += [f"alpha_{i} = {a}" for i, a in enumerate(data.alphas)]
    lines.append("identities hold" if ok else f"identities FAIL at i = {data.failures}")
    _emit(args, payload, lines, out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_generate(args, stdin, out) -> int:
    inst = generate_random_instance(args.seed, args.profile, args.max_h_degree, args.steps,
                                    family=args.family)
    d = inst.to_dict()
    lines = [f"family: {inst.family}", f"f = {inst.f}", f"g = {inst.g}"]
    if inst.matrix is not None:
        lines.append(f"matrix = {inst.matrix}")
    _emit(args, d, lines, out)
    return EXIT_OK


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-steps", type=int, default=DEFAULT_STEP_BUDGET)
    p.add_argument("--tower-depth", type=int, default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="sl2kxy", description="Exact SL2(K[x,y]) toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check-unimodular", cmd_check_unimodular, "decide whether (f, g) is unimodular")
    sp.add_argument("f"); sp.add_argument("g")
    sp = add("cofactors", cmd_cofactors, "Bezout witnesses P*f + Q*g = 1")
    sp.add_argument("f"); sp.add_argument("g")
    sp.add_argument("--method", choices=("groebner", "ansatz"), default="groebner")
    sp = add("canonicalize", cmd_canonicalize, "affine normal form of a degree-2 polynomial")
    sp.add_argument("f")
    sp = add("reduce-row", cmd_reduce_row, "reduce (f, g) with deg f <= 2")
    sp.add_argument("f"); sp.add_argument("g")
    for name, fn, help_ in (("decompose", cmd_decompose, "factor an SL2 matrix"),
                            ("verify", cmd_verify, "check a certificate against a matrix")):
        sp = add(name, fn, help_)
        for e in ("a11", "a12", "a21", "a22"):
            sp.add_argument(f"--{e}", required=True)
        if name == "verify":
            sp.add_argument("--certificate", required=True, help="JSON file, or - for stdin")
    sp = add("star", cmd_star, "homogeneous identities for an equal-degree row")
    sp.add_argument("f"); sp.add_argument("g")
    sp.add_argument("P", nargs="?"); sp.add_argument("Q", nargs="?")
    sp = add("generate", cmd_generate, "seeded random instance")
    sp.add_argument("--profile", choices=("row", "matrix"), default="row")
    sp.add_argument("--family", choices=FAMILIES, default=None)
    sp.add_argument("--max-h-degree", type=int, default=3)
    sp.add_argument("--steps", type=int, default=3)
    return parser


def run_command(argv, stdin=None, out=None, err=None) -> int:
    stdin = _Stdin(stdin or sys.stdin)
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_SYNTAX
    if args.max_steps <= 0 or (args.tower_depth is not None and args.tower_depth < 0):
        err.write("error: --max-steps must be positive and --tower-depth non-negative\n")
        return EXIT_SYNTAX
    if getattr(args, "steps", 0) < 0:
        err.write("error: --steps must be >= 0\n")
        return EXIT_SYNTAX
    ctx = depth_limit(args.tower_depth) if args.tower_depth is not None else nullcontext()
    try:
        with ctx:
            return args.fn(args, stdin, out)
    except ParseError as exc:
        err.write(f"syntax error: {exc}\n")
        return EXIT_SYNTAX
    except (OSError, ValueError) as exc:
        if isinstance(exc, (NotSL2, PreconditionViolated)):
            return _negative_or_scope(exc, err)
        err.write(f"error: {exc}\n")
        return EXIT_SYNTAX
    except NotUnimodular as exc:
        err.write(f"not unimodular: {exc}\n")
        return EXIT_NEGATIVE
    except InternalDivisionFailure as exc:
        err.write(f"identity check failed: {exc}\n")
        return EXIT_NEGATIVE
    except (BudgetExceeded, TowerDepthExceeded) as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except SqrtUnavailable as exc:
        err.write(f"out of scope: {exc}\n")
        return EXIT_SCOPE


def _negative_or_scope(exc, err) -> int:
    if isinstance(exc, NotSL2):
        err.write(f"not in SL2: {exc}\n")
        return EXIT_NEGATIVE
    err.write(f"out of scope: {exc}\n")
    return EXIT_SCOPE


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
