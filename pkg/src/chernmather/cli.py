"""Command-line front end.

Usage:
    chernmather eulerian --n 5 --check 40
    chernmather ecoef --n 8 --g 5 --k 4 --index 1,0,0,0
    chernmather c2-gap --g 5
    chernmather jacobian-classes --g 6 --case nonhyp --format csv
    chernmather criterion --g 6 --case nonhyp --c0 252 --c1 70 --c2 20 --codim 3
    chernmather prym-chi --g 6 --t 0 --k 1
    chernmather prym-chi --g 4 --g-max 12 --k 3 --sweep --format csv
    chernmather prym-classes --g 5 --t 2
    chernmather genus5 --format json

Exit status: 0 on success, 2 on malformed arguments, 1 when the inputs
violate a precondition of the computation.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import rational
from .combinatorics import eulerian_defining_check, eulerian_polynomial
from .genus5 import genus5_hyperelliptic_report
from .jacobian import (
    CurveCase,
    criterion_check,
    dim_omega,
    reference_multiplier,
    verdict_is_scale_invariant,
)
from .prym import (
    EPrime,
    SCycle,
    census_loci,
    euler_characteristic,
    matches_jacobian_dimension,
    prym_chern_mather_t0,
    prym_chern_mather_t_pos,
)
from .series import c2_gap, e_coefficient


class OutputFormat(enum.Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


@dataclass
class Output:
    """What a subcommand produced: a table, a JSON document and a text rendering."""

    text: str
    rows: list[dict[str, Any]] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)

    def render(self, fmt: OutputFormat) -> str:
        if fmt is OutputFormat.TEXT:
            return self.text.rstrip("\n") + "\n"
        if fmt is OutputFormat.CSV:
            return rows_to_csv(self.rows)
        doc = dict(self.payload)
        doc["rows"] = self.rows
        return dump_json(doc)


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _csv_cell(v: Any) -> Any:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return v


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue()


def format_table(rows: list[dict[str, Any]]) -> str:
    if not rows:
        return "(empty)"
    cols = list(rows[0])
    cells = [[str(_csv_cell(r[c])) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational_arg(text: str) -> Fraction:
    try:
        return rational.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _case_arg(text: str) -> CurveCase:
    try:
        return CurveCase.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- subcommands


def cmd_eulerian(args) -> Output:
    p = eulerian_polynomial(args.n)
    rows = [{"power": i, "coeff": c} for i, c in enumerate(p.coeffs)]
    payload: dict[str, Any] = {"n": args.n, "coeffs": list(p.coeffs), "polynomial": str(p)}
    text = str(p)
    if args.check is not None:
        ok = eulerian_defining_check(args.n, args.check)
        payload["check"] = {"order": args.check, "holds": ok}
        text += f"\ndefining identity mod x^{args.check}: {'holds' if ok else 'FAILS'}"
    return Output(text, rows, payload)


def cmd_ecoef(args) -> Output:
    value = e_coefficient(args.n, args.g, args.k, args.index)
    idx = ",".join(map(str, args.index))
    row = {"n": args.n, "g": args.g, "k": args.k, "index": idx, "value": rational.to_str(value)}
    return Output(f"E^{args.n}_{args.k}({idx}) = {value}", [row], {"n": args.n, "g": args.g, "k": args.k, "index": list(args.index), "value": rational.to_str(value)})


def cmd_c2_gap(args) -> Output:
    value = c2_gap(args.g)
    row = {"g": args.g, "value": rational.to_str(value)}
    return Output(f"c2 gap at g={args.g}: {value}", [row], dict(row))


def cmd_jacobian_classes(args) -> Output:
    g, case = args.g, args.case
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    rows = [
        {"r": r, "multiplier": reference_multiplier(g, r, case), "basis": f"theta^{g - r}/{g - r}!"}
        for r in range(g)
    ]
    payload: dict[str, Any] = {"g": g, "case": case.value}
    text = f"c_M,r(cc(IC_Theta)) on a genus-{g} {case.value} Jacobian\n" + format_table(rows)
    if g >= 2:
        payload["dim_omega"] = dim_omega(g, case)
        text += f"\ndim omega = {payload['dim_omega']}"
    return Output(text, rows, payload)


def cmd_criterion(args) -> Output:
    verdict = criterion_check(args.g, args.case, args.c0, args.c1, args.c2, args.codim)
    invariant = verdict_is_scale_invariant(args.g, args.case, args.c0, args.c1, args.c2, args.codim)
    rec = verdict.reconstruction
    row = {
        "g": args.g,
        "case": args.case.value,
        "verdict": verdict.tag.value,
        "c0": rec[0] if rec else None,
        "c1": rational.to_str(rec[1]) if rec else None,
        "c2": rational.to_str(rec[2]) if rec else None,
        "scale_invariant": invariant,
    }
    payload = {
        "g": args.g,
        "case": args.case.value,
        "inputs": {
            "c0": rational.to_str(args.c0),
            "c1": rational.to_str(args.c1),
            "c2": rational.to_str(args.c2),
            "codim": args.codim,
        },
        "verdict": verdict.tag.value,
        "reason": verdict.reason,
        "reconstruction": None if rec is None else {"c0": rec[0], "c1": rational.to_str(rec[1]), "c2": rational.to_str(rec[2])},
        "equations": list(verdict.equations),
        "scale_invariant": invariant,
    }
    lines = [f"verdict: {verdict.tag.value}", f"reason: {verdict.reason}"]
    lines += [f"  {e}" for e in verdict.equations]
    if rec:
        lines.append(f"reconstruction: c0={rec[0]}, c1={rec[1]}*w1, c2={rec[2]}*w2")
    lines.append(f"verdict invariant under Adams rescaling: {invariant}")
    return Output("\n".join(lines), [row], payload)


def _chi_row(locus) -> dict[str, Any]:
    chi = euler_characteristic(locus)
    where = f"t={locus.t}" if isinstance(locus, EPrime) else "d=" + "+".join(map(str, locus.partition))
    return {
        "g": locus.g,
        "t-or-partition": where,
        "k": locus.k,
        "chi-tag": chi.tag.value,
        "chi-value": chi.value,
        "matches-jacobian": matches_jacobian_dimension(locus),
        "note": chi.note,
    }


def _sort_key(locus):
    if isinstance(locus, EPrime):
        return (locus.g, 0, (locus.t,), locus.k)
    return (locus.g, 1, locus.partition, locus.k)


def cmd_prym_chi(args) -> Output:
    if args.sweep:
        g_max = args.g_max if args.g_max is not None else args.g
        loci = [l for g in range(args.g, g_max + 1) for l in census_loci(g, args.k)]
        loci.sort(key=_sort_key)
    else:
        if (args.t is None) == (args.partition is None):
            raise ValueError("give exactly one of --t or --partition (or use --sweep)")
        if args.t is not None:
            locus = EPrime(args.g, args.t, args.k)
        else:
            locus = SCycle(tuple(args.partition), args.k)
            if locus.g != args.g:
                raise ValueError(f"partition sums to {locus.g}, not g={args.g}")
        loci = [locus]
    rows = [_chi_row(l) for l in loci]
    return Output(format_table(rows), rows, {"sweep": bool(args.sweep)})


def cmd_prym_classes(args) -> Output:
    g, t = args.g, args.t
    if t == 0:
        classes = {r: prym_chern_mather_t0(g, r) for r in range(1, g)}
        rows = [{"r": r, "a": None, "b": None, "coeff": rational.to_str(c[r])} for r, c in classes.items()]
        payload = {"g": g, "t": t, "basis": "w_r", "classes": {str(r): c.to_json() for r, c in classes.items()}}
        text = "\n".join(f"c_M,{r} = {c}" for r, c in classes.items())
    else:
        classes = {r: prym_chern_mather_t_pos(g, t, r) for r in range(1, g)}
        rows = [
            {"r": r, "a": a, "b": b, "coeff": rational.to_str(coeff)}
            for r, c in classes.items()
            for (a, b), coeff in c.coeffs.items()
        ]
        payload = {
            "g": g,
            "t": t,
            "basis": "e_{a,b}",
            "classes": {str(r): c.to_json() for r, c in classes.items()},
            "convention": "B_{-1} = 0 in both endpoint terms of the sum",
        }
        text = "\n".join(f"c_M,{r} = {c}" for r, c in classes.items())
        text += "\n(convention: B_{-1} = 0 at both endpoints)"
    return Output(text, rows, payload)


def cmd_genus5(args) -> Output:
    report = genus5_hyperelliptic_report()
    rows = [
        {
            "partition": "+".join(map(str, p)),
            "k": locus.k,
            "pairing": v,
            "lhs": report.lhs_multiplier,
            "rhs": report.rhs_multiplier,
            "divisible": d,
            "residue": res,
        }
        for locus, (p, v), (_, d, res) in zip(report.candidate_loci, report.pairing_values, report.verdicts)
    ]
    lines = [
        f"dim omega = {report.dim_omega}",
        f"relation on H_2: {report.lhs_multiplier} c_M,1(cc(IC_Theta)) = {report.rhs_multiplier} c_M,1(L)",
    ]
    for r in rows:
        lines.append(
            f"  S({r['partition'].replace('+', ',')})^{r['k']}: pairing {r['pairing']}, "
            f"{r['pairing']} mod {report.modulus} = {r['residue']}, divisible: {r['divisible']}"
        )
    lines.append("excluded" if report.excluded else "NOT excluded")
    return Output("\n".join(lines), rows, report.to_json())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chernmather", description="Exact Chern-Mather class calculator for theta divisors.")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    parser.add_argument("--output", metavar="PATH", default=None, help="write here instead of stdout")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("eulerian", cmd_eulerian, "Eulerian polynomial P_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", type=int, metavar="K", help="verify the defining identity modulo x^K")

    p = add("ecoef", cmd_ecoef, "universal coefficient E^n_k(i)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index", type=_int_list, required=True, help="i_1,...,i_{g-1}")

    p = add("c2-gap", cmd_c2_gap, "c_2 coefficient of the hyperelliptic combination")
    p.add_argument("--g", type=int, required=True)

    p = add("jacobian-classes", cmd_jacobian_classes, "Chern-Mather classes of a Jacobian theta divisor")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--case", type=_case_arg, required=True, help="nonhyp or hyp")

    p = add("criterion", cmd_criterion, "Jacobian-detection criterion")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--case", type=_case_arg, required=True)
    p.add_argument("--c0", type=_rational_arg, required=True)
    p.add_argument("--c1", type=_rational_arg, required=True, help="multiplier of w_1")
    p.add_argument("--c2", type=_rational_arg, required=True, help="multiplier of w_2")
    p.add_argument("--codim", type=int, required=True, help="codimension of the problematic locus")

    p = add("prym-chi", cmd_prym_chi, "Euler characteristic on the bielliptic Prym locus")
    p.add_argument("--g", type=int, required=True)
    where = p.add_mutually_exclusive_group()
    where.add_argument("--t", type=int)
    where.add_argument("--partition", type=_int_list)
    p.add_argument("--k", type=int, default=0, help="k, or the largest k when sweeping")
    p.add_argument("--sweep", action="store_true", help="all t, (g), (1,g-1) strata with k up to --k")
    p.add_argument("--g-max", type=int, default=None, help="sweep g from --g to this value")

    p = add("prym-classes", cmd_prym_classes, "Chern-Mather classes of the Prym theta divisor")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    add("genus5", cmd_genus5, "exclusion of hyperelliptic fake Jacobians in dimension 5")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"chernmather {args.command}: error: {exc}", file=stderr)
        return 1
    text = out.render(OutputFormat(args.format))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
