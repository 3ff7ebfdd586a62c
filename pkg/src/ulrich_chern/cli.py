"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification suite reports a mismatch,
2 for usage errors and bad input.  Every subcommand takes ``--format json|md``.
"""
from __future__ import annotations

import argparse
import ast
import json
import re
import sys
from typing import Any, Callable

from .bundles import (
    BundleClass,
    bundle_from_json,
    bundle_to_json,
    dual,
    is_big,
    nu,
    segre,
    segre_dual,
    twist,
    whitney_sum,
)
from .classifier import (
    UlrichModel,
    classify_nonbig,
    expected_nonbig,
    infinite_family_note,
    line_criterion_forces_big,
    linear_space_count_checks,
    nonbig_table_report,
    nu_of_model,
)
from .products import DeductionRecord, nonbig_family_pipeline, p2p2_nonbig_pipeline
from .reference import Q10_SPRIME_CHERN, ULRICH_SPINOR_NU
from .report import VerificationReport
from .ring import (
    CohClass,
    MultiProjective,
    Quadric,
    RingDescriptor,
    StructureConstantError,
    class_to_json,
    factor_class,
    format_class,
    hyperplane,
    integrate,
    ring_from_json,
    ring_to_json,
)
from .spinor import SpinorError, SpinorKind, n_max, spinor_chern, spinor_identities_check, spinor_nu_table, spinor_rank

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
MAX_EXPONENT = 256


class InputError(ValueError):
    """Bad user input; reported with exit code 2."""


# -- parsing helpers -----------------------------------------------------------------

def parse_ring(text: str) -> RingDescriptor:
    """``Q4``, ``P1xP2`` or ring JSON."""
    t = text.strip()
    if m := re.fullmatch(r"[Qq](\d+)", t):
        return Quadric(int(m.group(1)))
    if re.fullmatch(r"[Pp]\d+(?:[xX*][Pp]\d+)*", t):
        return MultiProjective(tuple(int(d) for d in re.findall(r"\d+", t)))
    try:
        data = json.loads(t)
    except json.JSONDecodeError as exc:
        raise InputError(f"cannot read ring {text!r}: expected Q<n>, P<a>xP<b>... or ring JSON") from exc
    return ring_from_json(data)


def parse_class(expr: str, ring: RingDescriptor) -> CohClass:
    """Evaluate a polynomial in ``h``, ``b<i>``, ``bp<m>`` or ``t<i>``; ``^`` and ``**`` are powers."""
    try:
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse expression {expr!r}") from exc
    out = _eval(tree.body, ring)
    return CohClass.one(ring).scale(out) if isinstance(out, int) else out


def _name(ring: RingDescriptor, name: str) -> CohClass:
    if name == "h":
        return hyperplane(ring)
    if isinstance(ring, MultiProjective):
        if m := re.fullmatch(r"t(\d+)", name):
            i = int(m.group(1))
            if 1 <= i <= len(ring.dims):
                return factor_class(ring, i - 1)
    elif re.fullmatch(r"bp?\d+", name):
        try:
            return CohClass.basis(ring, name)
        except KeyError:
            pass
    raise InputError(f"unknown symbol {name!r} on {ring}")


def _eval(node: ast.AST, ring: RingDescriptor):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if isinstance(node, ast.Name):
        return _name(ring, node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, ring)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, ring)
        if isinstance(node.op, ast.Pow):
            k = _eval(node.right, ring)
            if not isinstance(k, int) or not 0 <= k <= MAX_EXPONENT:
                raise InputError(f"exponents must be integers in 0..{MAX_EXPONENT}")
            return left**k
        right = _eval(node.right, ring)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise InputError(f"unsupported syntax: {ast.unparse(node)!r}")


def read_json(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from exc


def read_bundle(path: str) -> BundleClass:
    data = read_json(path)
    if not isinstance(data, dict):
        raise InputError("bundle JSON must be an object with ring, rank and chern")
    return bundle_from_json(data)


# -- rendering -------------------------------------------------------------------------

def chern_vector(E: BundleClass) -> dict[str, dict[str, int]]:
    return {f"c{i}": E.c(i).to_dict() for i in range(1, E.ring.dim + 1)}


def bundle_md(E: BundleClass) -> str:
    lines = [f"ring: {E.ring}  rank: {E.rank}", "", "| i | c_i |", "|---|---|"]
    lines += [f"| {i} | {format_class(E.c(i))} |" for i in range(1, E.ring.dim + 1)]
    return "\n".join(lines)


def emit(args, payload: Any, md: str | Callable[[], str]):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(md() if callable(md) else md)


def emit_report(args, rep: VerificationReport | DeductionRecord) -> int:
    if isinstance(rep, DeductionRecord):
        emit(args, rep.to_json(), rep.transcript)
    else:
        emit(args, rep.to_json(), rep.to_markdown)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def _check_n(n: int, lo: int = 2):
    if not lo <= n <= n_max():
        raise InputError(f"--n {n} outside {lo}..{n_max()}")


# -- ring ------------------------------------------------------------------------------

def cmd_ring_eval(args) -> int:
    ring = parse_ring(args.ring)
    x = parse_class(args.expr, ring)
    out = class_to_json(x)
    lines = [f"{ring}: {format_class(x)}"]
    if args.integrate:
        out["degree"] = integrate(x)
        lines.append(f"degree: {out['degree']}")
    emit(args, out, "\n".join(lines))
    return EXIT_OK


# -- bundle ----------------------------------------------------------------------------

def cmd_bundle(args) -> int:
    E = read_bundle(args.input)
    op = args.op
    if op == "show":
        emit(args, bundle_to_json(E), lambda: bundle_md(E))
    elif op == "dual":
        D = dual(E)
        emit(args, bundle_to_json(D), lambda: bundle_md(D))
    elif op == "twist":
        if args.by is None:
            raise InputError("twist needs --by EXPR")
        T = twist(E, parse_class(args.by, E.ring))
        emit(args, bundle_to_json(T), lambda: bundle_md(T))
    elif op == "sum":
        if args.other is None:
            raise InputError("sum needs --other FILE")
        W = whitney_sum(E, read_bundle(args.other))
        emit(args, bundle_to_json(W), lambda: bundle_md(W))
    elif op == "segre":
        s = segre(E)
        emit(
            args,
            {f"s{i}": s.part(i).to_dict() for i in range(1, E.ring.dim + 1)},
            lambda: "\n".join(f"s{i} = {format_class(s.part(i))}" for i in range(1, E.ring.dim + 1)),
        )
    elif op == "segre-dual":
        if args.i is None:
            raise InputError("segre-dual needs --i")
        x = segre_dual(E, args.i)
        emit(args, {"i": args.i, "class": x.to_dict(), "degree": integrate(x)}, f"s{args.i}(E*) = {format_class(x)}")
    elif op == "nu":
        v = nu(E)
        emit(args, {"nu": v}, str(v))
    elif op == "is-big":
        big, w = is_big(E)
        emit(args, {"big": big, "witness": w}, f"big: {big} (deg s_n(E*) = {w})")
    return EXIT_OK


# -- spinor ----------------------------------------------------------------------------

def cmd_spinor_chern(args) -> int:
    _check_n(args.n)
    kind = args.kind or ("s" if args.n % 2 else "sprime")
    E = spinor_chern(args.n, kind, ulrich_twist=args.ulrich_twist)
    payload = {
        "n": args.n,
        "kind": SpinorKind(kind).value,
        "ulrich_twist": args.ulrich_twist,
        "rank": E.rank,
        "ring": ring_to_json(E.ring),
        "chern": chern_vector(E),
    }
    emit(args, payload, lambda: bundle_md(E))
    return EXIT_OK


def cmd_spinor_nu_table(args) -> int:
    rows = spinor_nu_table(args.lo, args.hi)
    md = ["| n | rank | nu |", "|---|---|---|"] + [f"| {n} | {spinor_rank(n)} | {v} |" for n, v in rows]
    emit(args, [{"n": n, "rank": spinor_rank(n), "nu": v} for n, v in rows], "\n".join(md))
    return EXIT_OK


def cmd_spinor_identities(args) -> int:
    ns = [args.n] if args.n is not None else list(range(2, n_max() + 1, 2))
    rep = VerificationReport("spinor-identities")
    for n in ns:
        rep.extend(spinor_identities_check(n), prefix=f"Q{n}:")
    return emit_report(args, rep)


# -- quadric ---------------------------------------------------------------------------

def cmd_quadric_classify(args) -> int:
    _check_n(args.n)
    r_max = args.rmax if args.rmax is not None else 2 * spinor_rank(args.n)
    rows = classify_nonbig(args.n, r_max)
    note = infinite_family_note(args.n)
    payload: dict[str, Any] = {"n": args.n, "rmax": r_max, "rows": [r.to_json() for r in rows]}
    if note:
        payload["note"] = note
    rep = None
    if args.verify == "table1":
        rep = VerificationReport("nonbig-table")
        want = sorted(expected_nonbig(args.n, r_max))
        got = sorted((r.model.a, r.model.b) for r in rows)
        rep.add(f"Q{args.n}", expected=[list(x) for x in want], computed=[list(x) for x in got], note=f"r_max={r_max}")
        payload["verify"] = rep.to_json()

    def md() -> str:
        lines = [f"Non-big Ulrich bundles on Q{args.n}, rank <= {r_max}", ""]
        lines += ["| a | b | model | rank | nu | witness |", "|---|---|---|---|---|---|"]
        for r in rows:
            lines.append(f"| {r.model.a} | {r.model.b} | {r.model.label()} | {r.rank} | {r.nu} | {r.witness} |")
        if not rows:
            lines.append("| - | - | none | - | - | - |")
        if note:
            lines += ["", note]
        if rep is not None:
            lines += ["", rep.to_markdown()]
        return "\n".join(lines)

    emit(args, payload, md)
    return EXIT_OK if rep is None or rep.ok else EXIT_MISMATCH


def cmd_quadric_nu(args) -> int:
    _check_n(args.n)
    try:
        model = UlrichModel(args.n, args.a, args.b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    v = nu_of_model(model)
    emit(args, {"n": args.n, "a": args.a, "b": args.b, "rank": model.rank, "nu": v}, str(v))
    return EXIT_OK


# -- verify ----------------------------------------------------------------------------

def report_table1(multiples: int) -> VerificationReport:
    return nonbig_table_report(range(2, min(12, n_max()) + 1), multiples)


def report_chern_q10() -> VerificationReport:
    E = spinor_chern(10, SpinorKind.SPRIME)
    rep = VerificationReport("chern-q10")
    for i, want in Q10_SPRIME_CHERN.items():
        c = E.c(i)
        if isinstance(want, tuple):
            got = (c[f"b{i}"], c[f"bp{i}"])
            rep.add(f"c{i}", list(want), list(got), ok=sorted(got) == sorted(want), note="up to swapping the two plane classes")
        else:
            rep.add(f"c{i}", want, c[f"b{i}"], ok=c == c.part(i) and c[f"b{i}"] == want and c.to_dict().keys() <= {f"b{i}"})
    return rep


def report_nu_table() -> VerificationReport:
    rep = VerificationReport("spinor-nu")
    lo, hi = min(ULRICH_SPINOR_NU), max(ULRICH_SPINOR_NU)
    for n, v in spinor_nu_table(lo, hi):
        rep.add(f"Q{n}", ULRICH_SPINOR_NU[n], v)
    return rep


def report_line_criterion(hi: int) -> VerificationReport:
    """The criterion holds from n = 11 on, and wherever it holds nothing is non-big."""
    rep = VerificationReport("line-criterion")
    for n in range(3, hi + 1):
        forced = line_criterion_forces_big(n)
        if n >= 11:
            rep.add(f"n={n}", True, forced, tag="PAPER" if n <= 12 else "DERIVED")
        if forced and n <= min(12, n_max()):
            left = sorted(expected_nonbig(n, 2 * spinor_rank(n)))
            got = sorted((r.model.a, r.model.b) for r in classify_nonbig(n, 2 * spinor_rank(n)))
            rep.add(f"n={n}:no-nonbig", [], [list(x) for x in got], ok=not got and not left, tag="DERIVED")
    return rep


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "table1":
        mult = args.rmax if args.rmax is not None else 4
        if mult < 1:
            raise InputError("--rmax must be at least 1")
        return emit_report(args, report_table1(mult))
    if suite == "chern-q10":
        return emit_report(args, report_chern_q10())
    if suite == "nu-table":
        return emit_report(args, report_nu_table())
    if suite == "thm4":
        hi = args.rmax if args.rmax is not None else 8
        if not 1 <= hi <= 16:
            raise InputError("--rmax must lie in 1..16")
        return emit_report(args, p2p2_nonbig_pipeline(range(1, hi + 1)))
    if suite == "example-un":
        if args.n is None or args.r is None:
            raise InputError("example-un needs --n and --r")
        return emit_report(args, nonbig_family_pipeline(args.n, args.r))
    if suite == "theorem2-cases":
        return emit_report(args, linear_space_count_checks(args.m_max))
    if suite == "line-criterion":
        if args.n_hi < 3:
            raise InputError("--n-hi must be at least 3")
        return emit_report(args, report_line_criterion(args.n_hi))
    raise InputError(f"unknown suite {suite!r}")


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "md"), default="md")
    p = argparse.ArgumentParser(prog="ulrich-chern", description="Chern classes and bigness of Ulrich bundles.")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="cohomology ring arithmetic").add_subparsers(dest="action", required=True)
    ev = ring.add_parser("eval", parents=[fmt], help="evaluate a class expression")
    ev.add_argument("--ring", required=True, help="Q<n>, P<a>xP<b>... or ring JSON")
    ev.add_argument("expr")
    ev.add_argument("--integrate", action="store_true", help="also print the degree")
    ev.set_defaults(func=cmd_ring_eval)

    b = sub.add_parser("bundle", parents=[fmt], help="Chern calculus on bundle JSON")
    b.add_argument("op", choices=("show", "dual", "segre", "segre-dual", "nu", "is-big", "twist", "sum"))
    b.add_argument("--input", default="-", help="bundle JSON file, '-' for stdin")
    b.add_argument("--i", type=int)
    b.add_argument("--by", help="twisting class expression")
    b.add_argument("--other", help="second bundle JSON file for sum")
    b.set_defaults(func=cmd_bundle)

    sp = sub.add_parser("spinor", help="spinor bundles on quadrics").add_subparsers(dest="action", required=True)
    ch = sp.add_parser("chern", parents=[fmt])
    ch.add_argument("--n", type=int, required=True)
    ch.add_argument("--kind", choices=[k.value for k in SpinorKind])
    ch.add_argument("--ulrich-twist", action="store_true")
    ch.add_argument("--json", dest="format", action="store_const", const="json")
    ch.set_defaults(func=cmd_spinor_chern)
    nt = sp.add_parser("nu-table", parents=[fmt])
    nt.add_argument("--lo", type=int, default=2)
    nt.add_argument("--hi", type=int, default=10)
    nt.set_defaults(func=cmd_spinor_nu_table)
    ide = sp.add_parser("identities", parents=[fmt])
    ide.add_argument("--n", type=int)
    ide.set_defaults(func=cmd_spinor_identities)

    q = sub.add_parser("quadric", help="Ulrich bundles on quadrics").add_subparsers(dest="action", required=True)
    cl = q.add_parser("classify", parents=[fmt])
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--rmax", type=int, help="rank bound (default: twice the spinor rank)")
    cl.add_argument("--verify", choices=("table1",))
    cl.set_defaults(func=cmd_quadric_classify)
    qn = q.add_parser("nu", parents=[fmt])
    qn.add_argument("--n", type=int, required=True)
    qn.add_argument("--a", type=int, required=True)
    qn.add_argument("--b", type=int, default=0)
    qn.set_defaults(func=cmd_quadric_nu)

    v = sub.add_parser("verify", parents=[fmt], help="verification suites")
    v.add_argument(
        "suite", choices=("table1", "chern-q10", "nu-table", "thm4", "example-un", "theorem2-cases", "line-criterion")
    )
    v.add_argument("--rmax", type=int, help="table1: bound in spinor ranks (default 4); thm4: largest rank (default 8)")
    v.add_argument("--n", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--m-max", type=int, default=12)
    v.add_argument("--n-hi", type=int, default=40)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, TypeError, AttributeError, SpinorError, StructureConstantError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
