"""Command-line front end.

Every command prints one JSON document (or LaTeX with ``--format latex``).
Exit status: 0 on success or a passing check, 1 on a failed check, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr
from fractions import Fraction
from typing import Sequence

from . import generate, verify
from .algebra import Element, bracket, parse_basis, parse_rational, sigma, tau_zero, tau_zeta
from .trees import TreeParseError, enumerate_trees, parse, stats, sym_count
from .virasoro import V_SUITES, e, v_bracket, v_verify

VERIFY_SUITES = [
    "jacobi",
    "antisymmetry",
    "grading",
    "sigma",
    "xi-identity",
    "aut-relation",
    "self-centralizing",
    "ladder-free",
]

# argparse treats "-(...)" as an option; such tokens are smuggled through
# with this prefix and restored in _element_arg.
_MINUS = "\u2212"


class UsageError(Exception):
    pass


def _element_arg(text: str) -> Element:
    text = text.replace(_MINUS, "-", 1) if text.startswith(_MINUS) else text
    try:
        if text.lstrip().startswith("{"):
            return Element.from_json(json.loads(text))
        return Element.of(parse_basis(text))
    except (ValueError, TreeParseError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad element {text!r}: {exc}") from None


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def _tree_arg(text: str):
    try:
        return parse(text)
    except TreeParseError as exc:
        raise UsageError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "latex"], default="json")

    p = argparse.ArgumentParser(prog="ielie", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    trees = sub.add_parser("trees", help="rooted tree utilities")
    tsub = trees.add_subparsers(dest="action", required=True)
    en = tsub.add_parser("enumerate", parents=[common], help="list trees with n vertices")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--stats", action="store_true")
    xi = tsub.add_parser("xi", parents=[common], help="automorphism count of a tree")
    xi.add_argument("tree")

    br = sub.add_parser("bracket", parents=[common], help="bracket two elements")
    br.add_argument("x")
    br.add_argument("y")

    sg = sub.add_parser("sigma", parents=[common], help="apply the anti-involution")
    sg.add_argument("x")

    ta = sub.add_parser("tau", parents=[common], help="apply an automorphism")
    mode = ta.add_mutually_exclusive_group(required=True)
    mode.add_argument("--zeta")
    mode.add_argument("--zero", action="store_true")
    ta.add_argument("x")

    de = sub.add_parser("decompose", parents=[common], help="write D_t^+ in the generators")
    de.add_argument("basis")
    de.add_argument("--check", action="store_true", help="evaluate and compare")

    ve = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    ve.add_argument("suite", choices=VERIFY_SUITES)
    ve.add_argument("--max-degree", type=int, required=True)
    ve.add_argument("--trials", type=int, default=50)
    ve.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ve.add_argument("--jobs", type=int, default=None)
    ve.add_argument("--out")
    ve.add_argument("--timing", action="store_true", help="include elapsed_ms (not reproducible)")

    dv = sub.add_parser("derivations", parents=[common], help="degree-0 derivations of a truncation")
    dv.add_argument("--truncate", type=int, required=True)

    vi = sub.add_parser("virasoro", help="generalized Virasoro algebra V((1/q)Z)")
    vsub = vi.add_subparsers(dest="action", required=True)
    vb = vsub.add_parser("bracket", parents=[common])
    vb.add_argument("--q", type=int, required=True)
    vb.add_argument("--alpha", required=True)
    vb.add_argument("--beta", required=True)
    vv = vsub.add_parser("verify", parents=[common])
    vv.add_argument("suite", choices=[s.replace("_", "-") for s in V_SUITES] + list(V_SUITES))
    vv.add_argument("--q", type=int, required=True)
    vv.add_argument("--bound", type=int, required=True)
    vv.add_argument("--theta", default="3")
    vv.add_argument("--zeta", default="-1")
    vv.add_argument("--out")
    vv.add_argument("--timing", action="store_true")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _element_out(x: Element, fmt: str) -> str:
    return x.to_latex() + "\n" if fmt == "latex" else _dump(x.to_json())


def _poly_latex(p) -> str:
    if isinstance(p, generate.Generator):
        return f"D^{{+}}_{{{p.b.tree.canon}}}"
    if isinstance(p, generate.Bracket):
        return f"[{_poly_latex(p.left)}, {_poly_latex(p.right)}]"
    parts = []
    for c, q in p.terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else _coef_latex(mag)
        parts.append(f"{sign} {coef}{' ' if coef else ''}{_poly_latex(q)}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def _coef_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _velement_latex(x) -> str:
    parts = []
    for key, c in x.to_json().get("e", {}).items():
        c, key = Fraction(c), Fraction(key)
        mag = "" if abs(c) == 1 else _coef_latex(abs(c)) + " "
        parts.append(("-" if c < 0 else "+") + f" {mag}e_{{{_coef_latex(key)}}}")
    if x.terms.get("z"):
        c = x.terms["z"]
        mag = "" if abs(c) == 1 else _coef_latex(abs(c)) + " "
        parts.append(("-" if c < 0 else "+") + f" {mag}z")
    text = " ".join(parts) or "0"
    return text[2:] if text.startswith("+ ") else text


def _report_out(report: verify.Report, args) -> tuple[int, str]:
    doc = report.to_json(timing=args.timing)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump(doc))
    if args.format == "latex":
        text = (
            "\\begin{tabular}{ll}\n"
            f"suite & {report.suite.replace('_', '-')} \\\\\n"
            f"cases & {report.cases} \\\\\n"
            f"violations & {len(report.violations)} \\\\\n"
            f"pass & {'yes' if report.passed else 'no'} \\\\\n"
            "\\end{tabular}\n"
        )
    else:
        text = _dump(doc)
    return (0 if report.passed else 1), text


def _dispatch(args) -> tuple[int, str]:
    fmt = getattr(args, "format", "json")
    if args.verb == "trees":
        if args.action == "enumerate":
            if args.n < 1:
                raise UsageError("--n must be >= 1")
            ts = enumerate_trees(args.n)
            if args.stats:
                data = []
                for t in ts:
                    st = stats(t)
                    data.append(
                        {
                            "tree": t.canon,
                            "size": st.size,
                            "depth": st.depth,
                            "rdeg": st.rdeg,
                            "compsize": st.compsize,
                            "xi": sym_count(t),
                        }
                    )
            else:
                data = [t.canon for t in ts]
            if fmt == "latex":
                return 0, "\n".join(f"\\texttt{{{t.canon}}}" for t in ts) + "\n"
            return 0, _dump(data)
        t = _tree_arg(args.tree)
        if fmt == "latex":
            return 0, f"\\xi_{{{t.canon}}} = {sym_count(t)}\n"
        return 0, _dump({"tree": t.canon, "xi": sym_count(t)})

    if args.verb == "bracket":
        return 0, _element_out(bracket(_element_arg(args.x), _element_arg(args.y)), fmt)
    if args.verb == "sigma":
        return 0, _element_out(sigma(_element_arg(args.x)), fmt)
    if args.verb == "tau":
        x = _element_arg(args.x)
        if args.zero:
            return 0, _element_out(tau_zero(x), fmt)
        zeta = _rational_arg(args.zeta)
        if not zeta:
            raise UsageError("--zeta must be nonzero")
        return 0, _element_out(tau_zeta(zeta, x), fmt)

    if args.verb == "decompose":
        x = _element_arg(args.basis)
        (b,) = x.terms if len(x) == 1 else (None,)
        if b is None or b.kind != "+" or x.coeff(b) != 1:
            raise UsageError("decompose takes a single '+<tree>' basis element")
        poly = generate.decompose(b.tree)
        ok = True
        doc = {"tree": b.tree.canon, "polynomial": generate.to_json(poly)}
        if args.check:
            ok = generate.evaluate(poly) == Element.of(b)
            doc["check"] = ok
        if fmt == "latex":
            return (0 if ok else 1), _poly_latex(poly) + "\n"
        return (0 if ok else 1), _dump(doc)

    if args.verb == "verify":
        jobs = args.jobs if args.jobs is not None else verify.default_jobs()
        k = args.max_degree
        if k < 1:
            raise UsageError("--max-degree must be >= 1")
        if args.suite == "self-centralizing":
            report = verify.self_centralizing_check(k, args.trials, args.seed, jobs=jobs)
        elif args.suite == "ladder-free":
            report = verify.Report("ladder_free", {"max_degree": k})
            for m in range(1, k + 1):
                report.merge(generate.ladder_free_check(m))
        else:
            report = verify.run_suite(args.suite, k, jobs=jobs)
        return _report_out(report, args)

    if args.verb == "derivations":
        if args.truncate < 1:
            raise UsageError("--truncate must be >= 1")
        space = verify.derivation_space(args.truncate)
        doc = {
            "truncate": args.truncate,
            "dimension": space.dimension,
            "inner_ad_d": space.matches_ad_d(),
            "basis": [
                {b.text(): img.to_json() for b, img in sorted(delta.items(), key=lambda kv: kv[0].sort_key()) if img}
                for delta in space.basis
            ],
        }
        if fmt == "latex":
            return 0, f"\\dim \\mathrm{{Der}}_0 = {space.dimension}\n"
        return 0, _dump(doc)

    if args.verb == "virasoro":
        if args.q < 1:
            raise UsageError("--q must be >= 1")
        if args.action == "bracket":
            try:
                x = e(args.q, _rational_arg(args.alpha))
                y = e(args.q, _rational_arg(args.beta))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            out = v_bracket(x, y)
            if fmt == "latex":
                return 0, _velement_latex(out) + "\n"
            return 0, _dump(out.to_json())
        report = v_verify(
            args.suite, args.q, args.bound, theta_gen=_rational_arg(args.theta), zeta=_rational_arg(args.zeta)
        )
        return _report_out(report, args)
    raise UsageError(f"unknown verb {args.verb!r}")


def run(argv: Sequence[str]) -> tuple[int, bytes]:
    """Run one command; return the exit code and stdout bytes.

    Usage errors are written to stderr.
    """
    argv = [_MINUS + a[1:] if a.startswith("-(") else a for a in argv]
    parser = _build_parser()
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        sys.stderr.write(err.getvalue())
        return (exc.code if isinstance(exc.code, int) else 2), b""
    try:
        code, text = _dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"ielie: error: {exc}\n")
        return 2, b""
    return code, text.encode("utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
