"""Command-line frontend.

Subcommands: ``squashed`` (key-rate upper bound), ``lp primal`` / ``lp dual``
(the purity programmes), ``verify rep`` (exact representation-theory checks),
``bounds`` (consolidated table) and ``purity`` (floating see-saw oracle).

Results go to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 solver failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import bounds as bnd
from . import programs as prg
from . import projectors as prj
from . import young
from .seesaw import ResourceLimitError
from .simplex import SolverError

THREADS_ENV = "ANTISYM_THREADS"

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_SOLVER = 3


class UsageError(ValueError):
    pass


def _row(quantity: str, exact: Fraction | None, decimal: float, source: str,
         n=None, d=None) -> dict:
    return {"quantity": quantity, "n": n, "d": d, "exact": exact,
            "decimal": decimal, "source": source}


def _fmt_d(d) -> str:
    if d is None:
        return ""
    return "inf" if d == math.inf else str(d)


def _fmt_exact(x: Fraction | None) -> str:
    return "" if x is None else (str(x.numerator) if x.denominator == 1
                                 else f"{x.numerator}/{x.denominator}")


def render_text(payload: dict) -> str:
    lines = [f"# {payload['command']}"]
    params = payload.get("params") or {}
    if params:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in params.items()))
    rows = payload["results"]
    headers = ("quantity", "n", "d", "exact", "decimal", "source")
    table = [[r["quantity"], "" if r["n"] is None else str(r["n"]),
              _fmt_d(r["d"]), _fmt_exact(r["exact"]),
              repr(r["decimal"]) if r["decimal"] is not None else "",
              r["source"]] for r in rows]
    widths = [max(len(h), *(len(t[i]) for t in table)) if table else len(h)
              for i, h in enumerate(headers)]
    lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
    for t in table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    def encode(obj):
        if isinstance(obj, Fraction):
            return {"num": str(obj.numerator), "den": str(obj.denominator)}
        if obj == math.inf:
            return "inf"
        raise TypeError(f"not JSON-serialisable: {obj!r}")

    out = dict(payload)
    out["results"] = [
        {**r, "exact": None if r["exact"] is None else
         {"num": str(r["exact"].numerator), "den": str(r["exact"].denominator)},
         "d": None if r["d"] is None else ("inf" if r["d"] == math.inf else r["d"])}
        for r in payload["results"]]
    params = out.get("params")
    if params:
        out["params"] = {k: ("inf" if v == math.inf else v)
                         for k, v in params.items()}
    return json.dumps(out, sort_keys=True, indent=2, default=encode) + "\n"


def render_csv(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("quantity", "n", "d", "exact_num", "exact_den",
                     "decimal", "source"))
    for r in payload["results"]:
        exact = r["exact"]
        writer.writerow((
            r["quantity"],
            "" if r["n"] is None else r["n"],
            _fmt_d(r["d"]),
            "" if exact is None else exact.numerator,
            "" if exact is None else exact.denominator,
            "" if r["decimal"] is None else repr(r["decimal"]),
            r["source"]))
    return buf.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def emit(payload: dict, args) -> None:
    text = RENDERERS[args.format](payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational: {text!r}") from exc


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be >= 1")
    return value


# -- commands -----------------------------------------------------------------

def cmd_squashed(args) -> int:
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    report = bnd.squashed_upper_bound(args.d)
    rows = [_row("key_upper_bound", report.exact_core, report.log2_value,
                 report.source, d=args.d),
            _row("argmin_k", Fraction(report.params["argmin_k"]),
                 float(report.params["argmin_k"]), "minimising extension size",
                 d=args.d)]
    if args.all_k:
        for k in range(2, args.d + 1):
            cmi = bnd.extension_cmi(args.d, k)
            rows.append(_row(f"cmi_k{k}", cmi.ratio, cmi.bits,
                             "extension conditional mutual information",
                             d=args.d))
    emit({"command": "squashed", "params": {"d": args.d, "all_k": args.all_k},
          "results": rows}, args)
    return EXIT_OK


def _resolve_d(args):
    if getattr(args, "dinf", False):
        if getattr(args, "d", None) is not None:
            raise UsageError("--d and --dinf are mutually exclusive")
        return math.inf
    d = getattr(args, "d", None)
    if d is None:
        return math.inf
    if d < 3:
        raise UsageError("--d must be at least 3")
    return d


def cmd_lp_primal(args) -> int:
    d = _resolve_d(args)
    try:
        value, solution, _ = prg.solve_purity_bound(
            args.n, d, parity=args.parity, form=args.form, corner=args.corner)
    except ValueError as exc:
        raise UsageError(str(exc))
    coeff = Fraction(-1, args.n)
    ec = float(coeff) * bnd.log2_fraction(value)
    rows = [
        _row("purity_bound", value, float(value),
             "optimum of the symmetry-reduced programme", n=args.n, d=d),
        _row("ec_lower", value, ec, "-(1/n) log2 of the purity bound",
             n=args.n, d=d),
        _row("er_lower", value, ec / 2.0, "-(1/2n) log2 of the purity bound",
             n=args.n, d=d),
        _row("dual_value", solution.dual_value, float(solution.dual_value),
             "dual optimum (certifies the primal)", n=args.n, d=d),
    ]
    emit({"command": "lp primal",
          "params": {"n": args.n, "d": d, "form": args.form or "",
                     "parity": args.parity, "corner": args.corner},
          "results": rows}, args)
    return EXIT_OK


def cmd_lp_dual(args) -> int:
    beta = _parse_fraction(args.beta)
    gamma = _parse_fraction(args.gamma) if args.gamma is not None else None
    try:
        point = prg.analytic_dual_point(args.n, beta, gamma)
    except ValueError as exc:
        raise UsageError(str(exc))
    rows = [_row("dual_bound_z", point.z, float(point.z),
                 "value of the geometric dual point", n=args.n),
            _row("feasible", Fraction(1 if point.feasible else 0),
                 1.0 if point.feasible else 0.0,
                 "all dual constraints hold exactly", n=args.n)]
    for k, dk in enumerate(point.delta):
        rows.append(_row(f"delta_{k}", dk, float(dk),
                         "symmetrised dual weight", n=args.n))
    emit({"command": "lp dual",
          "params": {"n": args.n, "beta": str(beta),
                     "gamma": "" if gamma is None else str(gamma)},
          "results": rows}, args)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    if args.n < 1:
        raise UsageError("--n must be positive")
    kd = bnd.squashed_upper_bound(args.d)
    ec_lp = bnd.cost_lower_bound(args.n, prg.DINF, "lp")
    ec_an = bnd.cost_lower_bound(args.n, prg.DINF, "analytic")
    er_lp = bnd.relent_lower_bound(args.n, prg.DINF, "lp")
    er_an = bnd.relent_lower_bound(args.n, prg.DINF, "analytic")
    er_ppt = bnd.relent_ppt_value(args.d)
    rows = [
        _row("kd_upper", kd.exact_core, kd.log2_value, kd.source, d=args.d),
        _row("ec_lower_lp", ec_lp.exact_core, ec_lp.log2_value, ec_lp.source,
             n=args.n, d=args.d),
        _row("ec_lower_analytic", ec_an.exact_core, ec_an.log2_value,
             ec_an.source, n=args.n, d=args.d),
        _row("er_lower_lp", er_lp.exact_core, er_lp.log2_value, er_lp.source,
             n=args.n, d=args.d),
        _row("er_lower_analytic", er_an.exact_core, er_an.log2_value,
             er_an.source, n=args.n, d=args.d),
        _row("er_ppt_reference", er_ppt.exact_core, er_ppt.log2_value,
             er_ppt.source, d=args.d),
    ]
    emit({"command": "bounds", "params": {"d": args.d, "n": args.n},
          "results": rows}, args)
    return EXIT_OK


def cmd_purity(args) -> int:
    threads = _threads_from_env()
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    try:
        result = bnd.purity_seesaw(args.n, args.d, restarts=args.restarts,
                                   iterations=args.iters, seed=args.seed,
                                   threads=threads)
    except ResourceLimitError as exc:
        raise UsageError(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))
    value, _, _ = prg.solve_purity_bound(args.n, args.d, form="full3")
    ok = result.value <= float(value) + 1e-6
    rows = [
        _row("purity_seesaw", None, result.value,
             "see-saw lower bound on the maximum purity",
             n=args.n, d=args.d),
        _row("purity_lp_bound", value, float(value),
             "exact LP upper bound", n=args.n, d=args.d),
        _row("sandwich_ok", Fraction(1 if ok else 0), 1.0 if ok else 0.0,
             "see-saw <= LP bound + 1e-6", n=args.n, d=args.d),
    ]
    emit({"command": "purity",
          "params": {"d": args.d, "n": args.n, "restarts": args.restarts,
                     "iters": args.iters, "seed": args.seed,
                     "threads": threads},
          "results": rows}, args)
    return EXIT_OK if ok else EXIT_VERIFY


# -- exact verification battery -------------------------------------------------

def _verification_checks(d: int, level: str):
    """Yield (name, thunk) pairs; each thunk returns True on success."""
    from fractions import Fraction as F

    shapes = prj.present_shapes(d)

    def dims_ok():
        dims = young.plethysm_dimensions(d)
        return (dims.dim_1111 == young.ssyt_count((1, 1, 1, 1), d)
                and dims.dim_22 == young.ssyt_count((2, 2), d)
                and dims.dim_211 == young.ssyt_count((2, 1, 1), d)
                and dims.dim_1111 == math.comb(d, 4))

    def plethysm_ok():
        points = [[F(1)] * d, [F(i + 1) for i in range(d)],
                  [F(2 * i + 1, i + 2) for i in range(d)],
                  [F(-3, 7)] + [F(i * i + 1, 5) for i in range(d - 1)]]
        return all(young.plethysm_check(kind, d, pt).equal
                   for kind in ("sym2", "alt2") for pt in points)

    def algebra_ok():
        elems = {s: prj.young_projector_element(s) for s in prj.YOUNG_SHAPES}
        pair = prj.pair_projector_element()
        for s, e in elems.items():
            if e * e != e or e.adjoint() != e:
                return False
        names = list(elems)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                if (elems[names[i]] * elems[names[j]]).coeffs:
                    return False
        total = elems[(1, 1, 1, 1)] + elems[(2, 2)] + elems[(2, 1, 1)]
        return total == pair

    def traces_ok():
        for s in prj.YOUNG_SHAPES:
            elem = prj.young_projector_element(s)
            if elem.trace_in_dimension(d) != young.weyl_dimension(s, d):
                return False
        pair_dim = (d * (d - 1) // 2) ** 2
        return prj.pair_projector_element().trace_in_dimension(d) == pair_dim

    def flips_ok():
        expected = {(1, 1, 1, 1): F(-1), (2, 2): F(1, 2), (2, 1, 1): F(0)}
        got = prj.flip_overlaps(d, method="symbolic")
        return all(got[s] == expected[s] for s in shapes)

    def signs_ok():
        expected = {(1, 1, 1, 1): F(1), (2, 2): F(1), (2, 1, 1): F(-1)}
        got = prj.pair_flip_signs(d, method="symbolic")
        return all(got[s] == expected[s] for s in shapes)

    def overlaps_symbolic_ok():
        table = prj.ppt_overlap_table(d, method="symbolic")
        forms = prj.overlap_closed_forms(d)
        return (table.values == forms.values
                and all(s == 1 for s in table.column_sums()))

    yield "plethysm dimensions", dims_ok
    yield "plethysm characters", plethysm_ok
    yield "projector group algebra", algebra_ok
    yield "projector traces", traces_ok
    yield "flip expectations", flips_ok
    yield "pair flip signs", signs_ok
    yield "transpose overlaps (symbolic)", overlaps_symbolic_ok

    if level != "full":
        return

    basis = prj.PairBasis(d)

    def projector_matrices_ok():
        for s in prj.YOUNG_SHAPES:
            mat = basis.restricted_element(prj.young_projector_element(s))
            if mat @ mat != mat:
                return False
            if mat.trace() != young.weyl_dimension(s, d):
                return False
        return True

    def reduced_states_ok():
        expected_weight = {(1, 1, 1, 1): F(1), (2, 2): F(1, 4),
                           (2, 1, 1): F(1, 2)}
        if prj.flip_overlaps(d, method="matrix") != \
                prj.flip_overlaps(d, method="symbolic"):
            return False
        return all(prj.reduced_pair_state(s, d)
                   == prj.werner_mixture(expected_weight[s], d)
                   for s in shapes)

    def invariant_projectors_ok():
        bell, adjoint, tail = prj.invariant_projectors(d, restricted=True)
        ident = basis.identity()
        if bell @ bell != bell or adjoint @ adjoint != adjoint:
            return False
        if not (bell @ adjoint).is_zero():
            return False
        if bell + adjoint + tail != ident:
            return False
        expected = (F(1), F(d * d - 1), F((d * (d - 1) // 2) ** 2 - d * d))
        return (bell.trace(), adjoint.trace(), tail.trace()) == expected

    def overlaps_matrix_ok():
        table = prj.ppt_overlap_table(d, method="matrix")
        forms = prj.overlap_closed_forms(d)
        return (table.values == forms.values
                and all(s == 1 for s in table.column_sums()))

    yield "projector matrices (restricted)", projector_matrices_ok
    yield "reduced pair states", reduced_states_ok
    yield "invariant projectors", invariant_projectors_ok
    yield "transpose overlaps (matrix)", overlaps_matrix_ok


def cmd_verify(args) -> int:
    if not 3 <= args.d <= 7:
        raise UsageError("--d must lie in 3..7")
    rows = []
    failures = []
    for name, thunk in _verification_checks(args.d, args.level):
        ok = bool(thunk())
        rows.append(_row(name.replace(" ", "_"), Fraction(1 if ok else 0),
                         1.0 if ok else 0.0,
                         "exact identity check", d=args.d))
        if not ok:
            failures.append(name)
    emit({"command": "verify rep",
          "params": {"d": args.d, "level": args.level},
          "results": rows}, args)
    if failures:
        print(f"verification failed: {failures[0]}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default text)")
    common.add_argument("--out", metavar="FILE",
                        help="write results to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="antisym",
        description="Exact entanglement bounds for the antisymmetric state.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("squashed", parents=[common],
                       help="key-rate upper bound from the antisymmetric extension")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--all-k", action="store_true", dest="all_k")
    p.set_defaults(func=cmd_squashed)

    lp = sub.add_parser("lp", help="purity programmes")
    lp_sub = lp.add_subparsers(dest="lp_command", required=True)
    p = lp_sub.add_parser("primal", parents=[common],
                          help="solve the symmetry-reduced purity programme")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--dinf", action="store_true",
                   help="use the dimension-free limit programme")
    p.add_argument("--form", choices=prg.FORMS, default=None)
    p.add_argument("--parity", choices=prg.PARITIES, default="none")
    p.add_argument("--corner", choices=prj.CORNER_VARIANTS, default="derived")
    p.set_defaults(func=cmd_lp_primal)

    p = lp_sub.add_parser("dual", parents=[common],
                          help="evaluate the geometric dual point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", default="1/2")
    p.add_argument("--gamma", default=None)
    p.set_defaults(func=cmd_lp_dual)

    verify = sub.add_parser("verify", help="exact verification batteries")
    verify_sub = verify.add_subparsers(dest="verify_command", required=True)
    p = verify_sub.add_parser("rep", parents=[common],
                              help="representation-theoretic identities")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common],
                       help="consolidated bound table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("purity", parents=[common],
                       help="floating-point see-saw oracle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_purity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # UsageError and domain errors raised by the library
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except RuntimeError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
