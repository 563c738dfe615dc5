"""Acceptance checks: every identity the engine claims, run end to end.

Each check returns a CheckResult; the CLI selftest subcommand and the
acceptance test module both drive this list.  All checks are exact
(zero tolerance); a check fails if any single case deviates.

Where a published table entry is provably inconsistent with the verified
residuals (a handful of constant-factor slips), the check asserts the
residual-backed value and the documented relation to the printed one, so
any new deviation still fails.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .chain import (
    build_even_chain,
    build_odd_chain,
    potential_of,
    verify_chain,
)
from .exact import Polynomial, RationalFunction
from .maya import (
    CyclicStructure,
    DegenerateStructure,
    MayaDiagram,
    UniversalCharacter,
    build_diagram,
    enumerate_structures,
    flip_chain_of,
    minimal_flip_chain,
    static_flip_chain,
    translate,
)
from .orthopoly import AlphaParam, hermite, laguerre
from .painleve import piv_families, piv_residual, pv_from_chain, pv_residual
from .wronskian import (
    check_translation_equivalence_hermite,
    check_translation_equivalence_laguerre,
    hermite_wronskian,
    laguerre_pseudo_wronskian,
)

ALPHA_TRIPLE = (Fraction(1, 3), Fraction(2, 5), Fraction(7, 3))
ALPHA_FIVE = ALPHA_TRIPLE + (Fraction(5, 2), Fraction(-4, 3))


@dataclass
class CheckResult:
    criterion: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return "%s  criterion %d: %s  (%s, %.2fs)" % (
            status, self.criterion, self.name, self.detail, self.seconds
        )


def _result(criterion: int, name: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
    start = time.monotonic()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
    return CheckResult(criterion, name, ok, detail, time.monotonic() - start)


# -- criterion 1 -------------------------------------------------------------


def check_orthopoly_identities() -> CheckResult:
    def run():
        cases = 0
        for a in ALPHA_FIVE:
            for n in range(1, 11):
                if laguerre(n, a).derivative() != -laguerre(n - 1, a + 1):
                    return False, "derivative identity fails at n=%d a=%s" % (n, a)
                cases += 1
        z = Polynomial.x()
        zsq = z * z
        fact = 1
        for j in range(0, 6):
            if j > 0:
                fact *= j
            sign = -1 if j % 2 else 1
            even = sign * (4 ** j) * fact * laguerre(j, Fraction(-1, 2)).compose(zsq)
            if hermite(2 * j) != even:
                return False, "even bridge fails at j=%d" % j
            odd = sign * 2 * (4 ** j) * fact * z * laguerre(j, Fraction(1, 2)).compose(zsq)
            if hermite(2 * j + 1) != odd:
                return False, "odd bridge fails at j=%d" % j
            cases += 2
        return True, "%d identities" % cases

    return _result(1, "orthogonal polynomial identities", run)


# -- criterion 2 -------------------------------------------------------------


def _odd_parameter_grid(bound: int):
    for p in (1, 3, 5):
        for k in (1, 3, 5):
            if k > p or (p - k) % 2:
                continue
            for cs in enumerate_structures(p, k, bound):
                yield cs


def check_maya_cyclicity() -> CheckResult:
    def run():
        total = replays = 0
        for cs in _odd_parameter_grid(3):
            total += 1
            d, degenerate = build_diagram(cs)
            chain = static_flip_chain(cs)
            if chain.size != cs.p:
                return False, "chain size mismatch at %r" % (cs,)
            if chain.translation != cs.k:
                return False, "sign count rule fails at %r" % (cs,)
            if chain.apply(d) != translate(d, cs.k):
                return False, "replay does not translate at %r" % (cs,)
            replays += 1
            if degenerate:
                try:
                    flip_chain_of(cs)
                    return False, "degenerate structure not refused: %r" % (cs,)
                except DegenerateStructure:
                    pass
            else:
                minimal = minimal_flip_chain(d, cs.k)
                if minimal.multiset() != chain.multiset():
                    return False, "minimal chain differs at %r" % (cs,)
        return True, "%d structures, %d replays" % (total, replays)

    return _result(2, "cyclic diagram classification and flip replay", run)


# -- criterion 3 -------------------------------------------------------------


def _canonical_diagrams(max_entry: int, max_size: int) -> List[MayaDiagram]:
    out = [MayaDiagram(())]
    pool = range(1, max_entry + 1)
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(pool, size):
            out.append(MayaDiagram(combo))
    return out


def check_wronskian_equivalences() -> CheckResult:
    def run():
        h_cases = 0
        for d in _canonical_diagrams(7, 4):
            for k in (1, 2, 3):
                check_translation_equivalence_hermite(d, k)  # NotProportional on failure
                h_cases += 1
        l_cases = 0
        ucs = [
            UniversalCharacter(a, b)
            for a in _canonical_diagrams(3, 2)
            for b in _canonical_diagrams(3, 2)
        ]
        for uc in ucs:
            for k1 in (0, 1, 2):
                for k2 in (0, 1, 2):
                    for a in ALPHA_TRIPLE:
                        check_translation_equivalence_laguerre(
                            uc, k1, k2, AlphaParam(a)
                        )
                        l_cases += 1
        return True, "%d Hermite + %d Laguerre proportionalities" % (h_cases, l_cases)

    return _result(3, "Wronskian translation equivalences", run)


# -- criterion 4 -------------------------------------------------------------


def _eps_of(sol) -> Tuple[Fraction, ...]:
    return sol.expected_eps


def check_odd_chains() -> CheckResult:
    def run():
        chains = 0
        for cs in _odd_parameter_grid(3):
            sol = build_odd_chain(cs, allow_degenerate=True)
            report = verify_chain(sol)
            if not report.ok:
                return False, "verification fails at %r" % (cs,)
            chains += 1

        w = Fraction(2)
        # period-5 translation-1 table, ordering (l1, l1+m1, l2, l2+m2, 0)
        tables = 0
        for (l1, m1, m2) in itertools.product((1, 2, 3), repeat=3):
            for l2 in range(l1 + m1 + 1, 4):
                cs = CyclicStructure(k=1, second_type=((l1, m1), (l2, m2)))
                sol = build_odd_chain(cs, perm=(1, 2, 3, 4, 0))
                if not verify_chain(sol).ok:
                    return False, "p5 k1 chain fails at %r" % (cs,)
                want = (
                    -m1 * w,
                    (l1 - l2 + m1) * w,
                    -m2 * w,
                    (l2 + m2) * w,
                    -(l1 + 1) * w,
                )
                if _eps_of(sol) != want:
                    return False, "p5 k1 table mismatch at %r" % (cs,)
                tables += 1
        # period-5 translation-3 table, ordering (1+3a1, 2+3a2, l1, l1+3m1, 0).
        # The printed closing seed drops the stride: the residual-verified
        # values use l1 + 3 m1, giving eps3 = -3 m1 w and eps4 = (l1+3m1) w.
        for (a1, a2, m1) in itertools.product((0, 1, 2, 3), (0, 1, 2, 3), (1, 2, 3)):
            l1 = 3
            cs = CyclicStructure(k=3, okamoto=(a1, a2), second_type=((l1, m1),))
            if cs.is_degenerate:
                continue
            sol = build_odd_chain(cs, perm=(1, 2, 3, 4, 0))
            if not verify_chain(sol).ok:
                return False, "p5 k3 chain fails at %r" % (cs,)
            want = (
                (-1 - 3 * (a2 - a1)) * w,
                (2 + 3 * a2 - l1) * w,
                -3 * m1 * w,
                (l1 + 3 * m1) * w,
                (-4 - 3 * a1) * w,
            )
            if _eps_of(sol) != want:
                return False, "p5 k3 table mismatch at %r" % (cs,)
            tables += 1
        return True, "%d chains verified, %d table rows matched" % (chains, tables)

    return _result(4, "odd chains: residuals, sum rule, parameter tables", run)


# -- criterion 5 -------------------------------------------------------------


def check_piv() -> CheckResult:
    def run():
        members = 0
        for lam in (1, 2, 3):
            for mu in (1, 2, 3):
                cs = CyclicStructure(k=1, second_type=((lam, mu),))
                fams = piv_families(cs)
                if fams[0].a != -(1 - mu - 2 * lam) or fams[0].b != -2 * mu * mu:
                    return False, "GH closed form fails at (%d,%d)" % (lam, mu)
                for inst in fams:
                    if not piv_residual(inst).is_zero:
                        return False, "GH residual nonzero at (%d,%d)" % (lam, mu)
                    members += 1
        for a1 in (0, 1, 2):
            for a2 in (0, 1, 2):
                cs = CyclicStructure(k=3, okamoto=(a1, a2))
                fams = piv_families(cs)
                if fams[0].a != a1 + a2:
                    return False, "Okamoto a fails at (%d,%d)" % (a1, a2)
                if fams[0].b != -Fraction(2, 9) * (-1 + 3 * (a1 - a2)) ** 2:
                    return False, "Okamoto b fails at (%d,%d)" % (a1, a2)
                for inst in fams:
                    if not piv_residual(inst).is_zero:
                        return False, "Okamoto residual nonzero at (%d,%d)" % (a1, a2)
                    members += 1
        return True, "%d family members, all residuals zero" % members

    return _result(5, "PIV families and closed-form parameters", run)


# -- criterion 6 -------------------------------------------------------------


def _check_even_case(
    cs1: CyclicStructure,
    cs2: CyclicStructure,
    perm: Optional[Sequence[int]],
    table: Optional[Callable[[Fraction], Tuple[Fraction, ...]]],
    alphas: Sequence[Fraction] = ALPHA_TRIPLE,
) -> Optional[str]:
    for a in alphas:
        sol = build_even_chain(cs1, cs2, AlphaParam(a), perm=perm)
        if not verify_chain(sol).ok:
            return "verification fails (%r, %r, alpha=%s)" % (cs1, cs2, a)
        if table is not None and sol.expected_eps != table(a):
            return "table mismatch (%r, %r, alpha=%s): %r" % (
                cs1, cs2, a, sol.expected_eps,
            )
    return None


def check_even_chains() -> CheckResult:
    w = Fraction(2)

    def run():
        cases = 0
        # period 2: bare isotonic seed
        err = _check_even_case(
            CyclicStructure(k=1),
            CyclicStructure(k=1),
            None,
            lambda a: (2 * a * w, -2 * a * w - 2 * w),
        )
        if err:
            return False, err
        cases += 1

        # period 4, split (3,1): chain (lam, lam+mu, 0) x (0)
        for lam, mu in itertools.product((1, 2), repeat=2):
            cs1 = CyclicStructure(k=1, second_type=((lam, mu),))
            err = _check_even_case(
                cs1,
                CyclicStructure(k=1),
                (1, 2, 0, 3),
                lambda a, lam=lam, mu=mu: (
                    -2 * mu * w,
                    2 * (lam + mu) * w,
                    2 * a * w,
                    2 * (-1 - lam - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1

        # period 4, split (2,2): chain (1+2a1, 0) x (1+2b1, 0)
        for a1, b1 in itertools.product((0, 1, 2), repeat=2):
            err = _check_even_case(
                CyclicStructure(k=2, okamoto=(a1,)),
                CyclicStructure(k=2, okamoto=(b1,)),
                (1, 0, 3, 2),
                lambda a, a1=a1, b1=b1: (
                    2 * (1 + 2 * a1) * w,
                    2 * (a - 1 - 2 * b1) * w,
                    2 * (1 + 2 * b1) * w,
                    2 * (-3 - 2 * a1 - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1

        # period 6, split (5,1): chain (l1, l1+m1, l2, l2+m2, 0) x (0).
        # Non-degenerate layouts need l2 > l1 + m1, so the second block is
        # swept through its gap g = l2 - l1 - m1 in {1, 2}.
        for l1, m1, g, m2 in itertools.product((1, 2), repeat=4):
            l2 = l1 + m1 + g
            cs1 = CyclicStructure(k=1, second_type=((l1, m1), (l2, m2)))
            err = _check_even_case(
                cs1,
                CyclicStructure(k=1),
                (1, 2, 3, 4, 0, 5),
                lambda a, l1=l1, m1=m1, l2=l2, m2=m2: (
                    -2 * m1 * w,
                    2 * (l1 + m1 - l2) * w,
                    -2 * m2 * w,
                    2 * (l2 + m2) * w,
                    2 * a * w,
                    2 * (-1 - l1 - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1

        # period 6, split (4,2): chain (1+2a1, l1, l1+2m1, 0) x (1+2b1, 0).
        # The printed closing seed l1+m1 drops the stride factor; the
        # residual-verified entries use l1 + 2 m1.
        for a1, b1, m1 in itertools.product((0, 1, 2), (0, 1, 2), (1, 2)):
            l1 = 2
            cs1 = CyclicStructure(k=2, okamoto=(a1,), second_type=((l1, m1),))
            err = _check_even_case(
                cs1,
                CyclicStructure(k=2, okamoto=(b1,)),
                (1, 2, 3, 0, 5, 4),
                lambda a, a1=a1, b1=b1, l1=l1, m1=m1: (
                    2 * (1 + 2 * a1 - l1) * w,
                    -4 * m1 * w,
                    2 * (l1 + 2 * m1) * w,
                    2 * (a - 1 - 2 * b1) * w,
                    2 * (1 + 2 * b1) * w,
                    2 * (-3 - 2 * a1 - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1

        # period 6, split (3,3) with translation 3
        for a1, a2, b1, b2 in itertools.product((0, 1, 2), repeat=4):
            err = _check_even_case(
                CyclicStructure(k=3, okamoto=(a1, a2)),
                CyclicStructure(k=3, okamoto=(b1, b2)),
                (1, 2, 0, 4, 5, 3),
                lambda a, a1=a1, a2=a2, b1=b1, b2=b2: (
                    2 * (-1 + 3 * (a1 - a2)) * w,
                    2 * (2 + 3 * a2) * w,
                    2 * (a - 1 - 3 * b1) * w,
                    2 * (-1 + 3 * (b1 - b2)) * w,
                    2 * (2 + 3 * b2) * w,
                    2 * (-4 - 3 * a1 - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1

        # period 6, split (3,3) with translation 1
        for l1, m1, r1, s1 in itertools.product((1, 2), repeat=4):
            err = _check_even_case(
                CyclicStructure(k=1, second_type=((l1, m1),)),
                CyclicStructure(k=1, second_type=((r1, s1),)),
                (1, 2, 0, 4, 5, 3),
                lambda a, l1=l1, m1=m1, r1=r1, s1=s1: (
                    -2 * m1 * w,
                    2 * (l1 + m1) * w,
                    2 * (a - r1) * w,
                    -2 * s1 * w,
                    2 * (r1 + s1) * w,
                    2 * (-1 - l1 - a) * w,
                ),
            )
            if err:
                return False, err
            cases += 1
        return True, "%d parameter cells x 3 alpha samples" % cases

    return _result(6, "even chains: residuals, sum rule, parameter tables", run)


# -- criterion 7 -------------------------------------------------------------


def check_pv() -> CheckResult:
    def run():
        instances = 0
        # split (3,1): the equation-solved parameters; the printed (a, b, c)
        # are 4x these, the printed d agrees (see decisions ledger).
        for lam, mu in itertools.product((1, 2), repeat=2):
            for a in ALPHA_TRIPLE:
                cs1 = CyclicStructure(k=1, second_type=((lam, mu),))
                sol = build_even_chain(
                    cs1, CyclicStructure(k=1), AlphaParam(a), perm=(1, 2, 0, 3)
                )
                inst = pv_from_chain(sol)
                want = (
                    Fraction(2 * mu * mu, 4),
                    Fraction(-2) * a * a / 4,
                    Fraction(4 * (a + 2 * lam + mu + 1), 4),
                    Fraction(-1, 2),
                )
                if (inst.a, inst.b, inst.c, inst.d) != want:
                    return False, "(3,1) params mismatch at (%d,%d,%s)" % (lam, mu, a)
                if not pv_residual(inst).is_zero:
                    return False, "(3,1) residual nonzero at (%d,%d,%s)" % (lam, mu, a)
                instances += 1
        # split (2,2): printed a, b, d agree; printed c is 4x the true one.
        for a1, b1 in itertools.product((0, 1, 2), repeat=2):
            for a in ALPHA_TRIPLE:
                sol = build_even_chain(
                    CyclicStructure(k=2, okamoto=(a1,)),
                    CyclicStructure(k=2, okamoto=(b1,)),
                    AlphaParam(a),
                    perm=(1, 0, 3, 2),
                )
                inst = pv_from_chain(sol)
                want = (
                    Fraction((1 + 2 * a1) ** 2, 8),
                    Fraction(-((1 + 2 * b1) ** 2), 8),
                    Fraction(8, 4) * (a + 1 + a1 - b1),
                    Fraction(-2),
                )
                if (inst.a, inst.b, inst.c, inst.d) != want:
                    return False, "(2,2) params mismatch at (%d,%d,%s)" % (a1, b1, a)
                if not pv_residual(inst).is_zero:
                    return False, "(2,2) residual nonzero at (%d,%d,%s)" % (a1, b1, a)
                instances += 1
        return True, "%d PV instances, all residuals zero" % instances

    return _result(7, "PV instances and parameters", run)


# -- criterion 8 -------------------------------------------------------------


def _strip_even_square(p: Polynomial) -> Polynomial:
    """Write p(z) = z**v * q(z) with q(0) != 0, then q as a polynomial in
    z**2 (requires q even, which holds for fixed-parity p)."""
    _, q = p.split_lowest()
    return q.decompress_even()


def check_degenerations() -> CheckResult:
    def run():
        x_sq = Polynomial((0, 0, 1))
        for m in range(1, 5):
            staircase = MayaDiagram(tuple(range(1, 2 * m, 2)))
            parts = potential_of(staircase)
            if parts.rational != RationalFunction(
                Polynomial.constant(m * (m + 1)), x_sq
            ):
                return False, "staircase potential fails at m=%d" % m

        sol = build_odd_chain(CyclicStructure(k=1))
        if sol.terms[0].rational_part() != RationalFunction(
            Polynomial((0, sol.delta / 2))
        ):
            return False, "one-step chain is not (shift/2) x"

        for a in ALPHA_TRIPLE:
            sol = build_even_chain(
                CyclicStructure(k=1), CyclicStructure(k=1), AlphaParam(a)
            )
            d = sol.delta
            e12 = sol.expected_eps[0]
            v2_want = RationalFunction(Polynomial((e12 / d + Fraction(1, 2), d / 4)))
            v1_want = RationalFunction(Polynomial((-(e12 / d + Fraction(1, 2)), d / 4)))
            if sol.terms[1].rational_part() != v2_want:
                return False, "two-step closed form fails (w2) at alpha=%s" % a
            if sol.terms[0].rational_part() != v1_want:
                return False, "two-step closed form fails (w1) at alpha=%s" % a

        half = AlphaParam(Fraction(1, 2))
        split_cases = 0
        for d in _canonical_diagrams(7, 7):
            odd_part = tuple((n - 1) // 2 for n in d.entries if n % 2 == 1)
            even_part = tuple(n // 2 for n in d.entries if n % 2 == 0)
            uc = UniversalCharacter(MayaDiagram(odd_part), MayaDiagram(even_part))
            lhs = _strip_even_square(hermite_wronskian(d).poly)
            rhs_poly = laguerre_pseudo_wronskian(uc, half).poly
            _, rhs = rhs_poly.split_lowest()
            if lhs * rhs.leading != rhs * lhs.leading:
                return False, "parity split fails at %r" % (d.entries,)
            split_cases += 1
        return True, "staircase, 1- and 2-step forms, %d parity splits" % split_cases

    return _result(8, "degeneration oracles", run)


ALL_CHECKS: Tuple[Callable[[], CheckResult], ...] = (
    check_orthopoly_identities,
    check_maya_cyclicity,
    check_wronskian_equivalences,
    check_odd_chains,
    check_piv,
    check_even_chains,
    check_pv,
    check_degenerations,
)


def run_all(criteria: Optional[Sequence[int]] = None) -> List[CheckResult]:
    results = []
    for i, fn in enumerate(ALL_CHECKS, start=1):
        if criteria and i not in criteria:
            continue
        results.append(fn())
    return results
