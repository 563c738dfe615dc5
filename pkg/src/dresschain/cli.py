"""Batch command line: enumerate structures, build and verify chains,
export Painleve solutions, run the acceptance suite.

All numbers cross the boundary as exact "p/q" strings; reports are
deterministic byte-for-byte for a fixed invocation.  Exit codes: 0 all
verifications passed, 1 at least one identity failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence

from . import latex as latex_mod
from .chain import build_even_chain, build_odd_chain, verify_chain
from .exact import frac_str, parse_frac
from .maya import (
    CyclicStructure,
    DegenerateStructure,
    InvalidParity,
    build_diagram,
    enumerate_structures,
    static_flip_chain,
)
from .orthopoly import AlphaParam, IntegerAlpha
from .painleve import (
    WrongPeriod,
    piv_families,
    piv_from_chain,
    piv_residual,
    pv_from_chain,
    pv_residual,
)
from .selftest import run_all


class UsageError(ValueError):
    """Invalid job description; surfaces as exit code 2."""


EVEN_SPLITS = {
    (3, 1): 1,
    (2, 2): 2,
    (5, 1): 1,
    (4, 2): 2,
    (3, 3): None,  # ambiguous: needs --shift 1 or 3
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _worker_count() -> int:
    raw = os.environ.get("DCHAIN_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError("DCHAIN_THREADS must be an integer, got %r" % raw)
    return max(1, n)


def _map_ordered(fn, items: Sequence):
    """Apply fn over items, optionally on a thread pool, preserving order."""
    n = _worker_count()
    if n == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _parse_int_list(text: str) -> List[int]:
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError("expected a comma list of integers, got %r" % text)


def _parse_alpha_list(text: Optional[str]) -> List[AlphaParam]:
    if not text:
        return []
    out = []
    for tok in text.split(","):
        try:
            out.append(AlphaParam(parse_frac(tok)))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad alpha %r: %s" % (tok, exc))
    return out


def _structure_from(period: int, shift: int, params: Sequence[int]) -> CyclicStructure:
    if shift < 1 or period < 1 or shift > period or (period - shift) % 2:
        raise UsageError("period %d and shift %d are not parity-consistent" % (period, shift))
    j = (period - shift) // 2
    need = (shift - 1) + 2 * j
    if len(params) != need:
        raise UsageError(
            "period %d shift %d needs %d parameters, got %d"
            % (period, shift, need, len(params))
        )
    okamoto = tuple(params[: shift - 1])
    pairs = tuple(
        (params[shift - 1 + 2 * i], params[shift + 2 * i]) for i in range(j)
    )
    try:
        return CyclicStructure(k=shift, okamoto=okamoto, second_type=pairs)
    except ValueError as exc:
        raise UsageError(str(exc))


def _even_structures(args) -> tuple:
    if not args.case:
        raise UsageError("even periods need --case p1,p2")
    case = tuple(_parse_int_list(args.case))
    if len(case) != 2 or (case[0], case[1]) not in EVEN_SPLITS:
        raise UsageError("unsupported case %r" % (args.case,))
    p1, p2 = case
    shift = EVEN_SPLITS[(p1, p2)]
    if shift is None:
        if not args.shift:
            raise UsageError("case 3,3 needs an explicit --shift (1 or 3)")
        shift = args.shift
    elif args.shift and args.shift != shift:
        raise UsageError("case %r forces shift %d" % (args.case, shift))
    params = _parse_int_list(args.params or "")
    need1 = (shift - 1) + (p1 - shift)
    need2 = (shift - 1) + (p2 - shift)
    if len(params) != need1 + need2:
        raise UsageError(
            "case %r shift %d needs %d+%d parameters, got %d"
            % (args.case, shift, need1, need2, len(params))
        )
    cs1 = _structure_from(p1, shift, params[:need1])
    cs2 = _structure_from(p2, shift, params[need1:])
    return cs1, cs2


def _perm(args) -> Optional[List[int]]:
    return _parse_int_list(args.perm) if args.perm else None


def _solution_json(sol) -> dict:
    return {
        "period": sol.period,
        "delta": frac_str(sol.delta),
        "omega": frac_str(sol.omega),
        "flips": [[f.level, f.sign, f.slot] for f in sol.chain_labels.flips],
        "expected_eps": [frac_str(e) for e in sol.expected_eps],
        "ladder": [pw.to_json() for pw in sol.ladder],
    }


def _odd_shift(args) -> int:
    if args.shift is not None:
        return args.shift
    if args.period == 1:
        return 1
    raise UsageError("odd periods above 1 need an explicit --shift")


def _build_solutions(args):
    """Construct the chain(s) a job describes; even jobs sweep alphas."""
    perm = _perm(args)
    if args.period % 2:
        cs = _structure_from(args.period, _odd_shift(args), _parse_int_list(args.params or ""))
        return [(None, build_odd_chain(cs, perm=perm, allow_degenerate=args.allow_degenerate))]
    alphas = _parse_alpha_list(args.alpha) or [AlphaParam(Fraction(1, 3))]
    cs1, cs2 = _even_structures(args)
    return [(a, build_even_chain(cs1, cs2, a, perm=perm)) for a in alphas]


def cmd_enum(args) -> int:
    try:
        structures = enumerate_structures(args.period, args.shift, args.bound)
    except InvalidParity as exc:
        raise UsageError(str(exc))

    def row(cs):
        diagram, degenerate = build_diagram(cs)
        chain = static_flip_chain(cs)
        return {
            "structure": cs.to_json(),
            "diagram": diagram.to_json(),
            "degenerate": degenerate,
            "flip_levels": list(chain.levels()),
        }

    rows = _map_ordered(row, structures)
    if args.format == "json":
        _emit(_dump({"command": "enum", "period": args.period, "shift": args.shift,
                     "bound": args.bound, "structures": rows}), args.out)
    elif args.format == "latex":
        lines = [
            "%s & %s & %s \\\\" % (
                latex_mod.structure_latex(CyclicStructure.from_json(r["structure"])),
                latex_mod.diagram_latex(build_diagram(CyclicStructure.from_json(r["structure"]))[0]),
                "degenerate" if r["degenerate"] else ",".join(map(str, r["flip_levels"])),
            )
            for r in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            "%-28s diagram=%-16s %s" % (
                r["structure"], r["diagram"],
                "DEGENERATE" if r["degenerate"] else "chain=%s" % (r["flip_levels"],),
            )
            for r in rows
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_build(args) -> int:
    solutions = _build_solutions(args)
    payload = []
    for a, sol in solutions:
        entry = _solution_json(sol)
        if a is not None:
            entry["alpha"] = frac_str(a.value)
        payload.append(entry)
    if args.format == "latex":
        _emit("\n".join(latex_mod.chain_latex(sol) for _, sol in solutions) + "\n", args.out)
    else:
        _emit(_dump({"command": "build", "chains": payload}), args.out)
    return 0


def cmd_verify(args) -> int:
    solutions = _build_solutions(args)
    reports = _map_ordered(lambda pair: verify_chain(pair[1]), solutions)
    entries = []
    all_ok = True
    for (a, sol), report in zip(solutions, reports):
        entry = report.to_json()
        if a is not None:
            entry["alpha"] = frac_str(a.value)
        ok = report.ok
        if sol.period == 3 and not sol.is_even:
            residual_zero = piv_residual(piv_from_chain(sol)).is_zero
            entry["piv_residual_zero"] = residual_zero
            ok = ok and residual_zero
        if sol.period == 4 and sol.is_even:
            residual_zero = pv_residual(pv_from_chain(sol)).is_zero
            entry["pv_residual_zero"] = residual_zero
            ok = ok and residual_zero
        entries.append(entry)
        all_ok = all_ok and ok
    if args.format == "text":
        lines = []
        for entry in entries:
            tag = "alpha=%s " % entry.get("alpha", "") if "alpha" in entry else ""
            ok = entry["sum_rule"] and all(eq["match"] for eq in entry["equations"])
            lines.append("%speriod=%d delta=%s %s" % (
                tag, entry["period"], entry["delta"], "OK" if ok else "FAILED"))
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump({"command": "verify", "reports": entries, "ok": all_ok}), args.out)
    return 0 if all_ok else 1


def cmd_painleve(args) -> int:
    if args.period == 3:
        cs = _structure_from(3, _odd_shift(args), _parse_int_list(args.params or ""))
        try:
            fams = piv_families(cs)
        except (WrongPeriod, DegenerateStructure) as exc:
            raise UsageError(str(exc))
        if args.format == "latex":
            start, _ = build_diagram(cs)
            lines = []
            for i, (f, rot) in enumerate(zip(fams, ((0, 1, 2), (1, 2, 0), (2, 0, 1)))):
                states = static_flip_chain(cs).permuted(rot).states(start)
                lines.append("y_{%d}: %s" % (
                    i, latex_mod.piv_latex(f, states[0].entries, states[1].entries)))
            _emit("\n".join(lines) + "\n", args.out)
            return 0
        payload = [f.to_json() for f in fams]
        ok = all(p["residual_zero"] for p in payload)
        _emit(_dump({"command": "painleve", "equation": "PIV", "families": payload,
                     "ok": ok}), args.out)
        return 0 if ok else 1
    if args.period == 4:
        solutions = _build_solutions(args)
        payload = []
        for a, sol in solutions:
            inst = pv_from_chain(sol)
            entry = inst.to_json()
            entry["alpha"] = frac_str(a.value)
            payload.append(entry)
        if args.format == "latex":
            _emit("\n".join(latex_mod.pv_latex(pv_from_chain(sol))
                            for _, sol in solutions) + "\n", args.out)
            return 0
        ok = all(p["residual_zero"] for p in payload)
        _emit(_dump({"command": "painleve", "equation": "PV", "solutions": payload,
                     "ok": ok}), args.out)
        return 0 if ok else 1
    raise UsageError("painleve needs --period 3 (PIV) or 4 (PV)")


def cmd_selftest(args) -> int:
    criteria = _parse_int_list(args.criteria) if args.criteria else None
    results = run_all(criteria)
    for r in results:
        sys.stdout.write(r.line() + "\n")
    ok = all(r.ok for r in results)
    if args.format == "json" and args.out:
        _emit(_dump({"command": "selftest", "ok": ok, "results": [
            {"criterion": r.criterion, "name": r.name, "ok": r.ok,
             "detail": r.detail} for r in results]}), args.out)
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dresschain",
        description="Exact construction and verification of rational "
                    "dressing-chain and Painleve IV/V solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_bound=False):
        p.add_argument("--period", type=int, required=True)
        p.add_argument("--shift", type=int, default=None)
        if with_bound:
            p.add_argument("--bound", type=int, default=1)
        p.add_argument("--case", type=str, default=None,
                       help="even-period split, e.g. 3,1")
        p.add_argument("--params", type=str, default=None,
                       help="comma list: Okamoto lengths then block pairs")
        p.add_argument("--alpha", type=str, default=None,
                       help="comma list of rational samples, e.g. 1/3,2/5")
        p.add_argument("--perm", type=str, default=None,
                       help="comma list: 0-based flip order")
        p.add_argument("--allow-degenerate", action="store_true")
        p.add_argument("--format", choices=("json", "text", "latex"), default="json")
        p.add_argument("--out", type=str, default=None)

    p_enum = sub.add_parser("enum", help="enumerate cyclic structures")
    p_enum.add_argument("--period", type=int, required=True)
    p_enum.add_argument("--shift", type=int, required=True)
    p_enum.add_argument("--bound", type=int, default=1)
    p_enum.add_argument("--format", choices=("json", "text", "latex"), default="json")
    p_enum.add_argument("--out", type=str, default=None)
    p_enum.set_defaults(fn=cmd_enum)

    p_build = sub.add_parser("build", help="construct a chain solution")
    common(p_build)
    p_build.set_defaults(fn=cmd_build)

    p_verify = sub.add_parser("verify", help="construct and verify a chain")
    common(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_pain = sub.add_parser("painleve", help="export PIV/PV solutions")
    common(p_pain)
    p_pain.set_defaults(fn=cmd_painleve)

    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--criteria", type=str, default=None,
                        help="comma list of criterion numbers to run")
    p_self.add_argument("--format", choices=("json", "text"), default="text")
    p_self.add_argument("--out", type=str, default=None)
    p_self.set_defaults(fn=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stdout.write(_dump({"error": str(exc)}))
        return 2
    except (IntegerAlpha, InvalidParity, DegenerateStructure, WrongPeriod) as exc:
        sys.stdout.write(_dump({"error": "%s: %s" % (type(exc).__name__, exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
