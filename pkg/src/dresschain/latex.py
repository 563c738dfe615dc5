"""LaTeX rendering of diagrams, block structures, chains and solutions.

Output mirrors the conventional notation for these objects: calligraphic
H / L with seed-tuple superscripts, block notation (lam | mu)_k, and the
t/sqrt(k) arguments of the rescaled period-3 solutions.  Rendering is
purely presentational; nothing here participates in verification.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .chain import ChainSolution
from .exact import Polynomial, RationalFunction
from .maya import CyclicStructure, MayaDiagram
from .painleve import PIVInstance, PVInstance


def frac_latex(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(q.numerator), q.denominator)


def poly_latex(p: Polynomial, var: str = "z") -> str:
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = frac_latex(mag)
        else:
            xs = var if i == 1 else "%s^{%d}" % (var, i)
            body = xs if mag == 1 else frac_latex(mag) + xs
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def ratfunc_latex(r: RationalFunction, var: str = "x") -> str:
    if r.den == Polynomial.one():
        return poly_latex(r.num, var)
    return r"\frac{%s}{%s}" % (poly_latex(r.num, var), poly_latex(r.den, var))


def diagram_latex(d: MayaDiagram) -> str:
    if not d.entries:
        return r"\varnothing"
    return "(" + ",".join(str(n) for n in d.entries) + ")"


def structure_latex(cs: CyclicStructure) -> str:
    parts = [
        r"(%d \mid %d)_{%d}" % (l, a, cs.k)
        for l, a in enumerate(cs.okamoto, start=1)
        if a > 0
    ]
    parts.extend(
        r"(%d \mid %d)_{%d}" % (l, m, cs.k) for l, m in cs.second_type
    )
    return r"\varnothing" if not parts else "(" + ", ".join(parts) + ")"


def chain_latex(sol: ChainSolution) -> str:
    flips = sol.chain_labels.flips
    if sol.is_even:
        first = ",".join(str(f.level) for f in flips if f.slot == 1)
        second = ",".join(str(f.level) for f in flips if f.slot == 2)
        return r"(%s) \otimes (%s)" % (first, second)
    return "(" + ",".join(str(f.level) for f in flips) + ")"


def _wronskian_symbol(kind: str, label: str, arg: str) -> str:
    return r"\mathcal{%s}^{%s}(%s)" % (kind, label, arg)


def _diagram_label(d: Sequence[int]) -> str:
    return "(" + ",".join(str(n) for n in d) + ")" if d else r"\varnothing"


def odd_term_latex(sol: ChainSolution, states: Sequence[MayaDiagram], i: int) -> str:
    """w_i of an odd chain as +-x + d/dx log(H.../H...)."""
    t = sol.terms[i - 1]
    head = "x" if t.lin == 1 else "-x" if t.lin == -1 else frac_latex(t.lin) + "x"
    top = _wronskian_symbol("H", _diagram_label(states[i - 1].entries), "x")
    bot = _wronskian_symbol("H", _diagram_label(states[i].entries), "x")
    return r"w_{%d}(x) = %s + \frac{d}{dx}\log\frac{%s}{%s}" % (i, head, top, bot)


def even_term_latex(sol: ChainSolution, states, i: int) -> str:
    """w_i of an even chain, with the 1/x coefficient and z = x^2."""
    t = sol.terms[i - 1]
    head = "x" if t.lin == 1 else "-x" if t.lin == -1 else frac_latex(t.lin) + "x"
    n_state, l_state = states[i - 1]
    n_next, l_next = states[i]
    label0 = _diagram_label(n_state.entries) + r" \otimes " + _diagram_label(l_state.entries)
    label1 = _diagram_label(n_next.entries) + r" \otimes " + _diagram_label(l_next.entries)
    inv = t.inv
    inv_part = "" if inv == 0 else (
        (" + " if inv > 0 else " - ") + r"\frac{%s}{x}" % frac_latex(abs(inv))
    )
    top = _wronskian_symbol("L", label0, r"z;\alpha")
    bot = _wronskian_symbol("L", label1, r"z;\alpha")
    return (
        r"w_{%d}(x) = %s%s + 2x\,\frac{d}{dz}\log\frac{%s}{%s},\quad z = x^2"
        % (i, head, inv_part, top, bot)
    )


def piv_latex(
    inst: PIVInstance,
    prev_diagram: Optional[Sequence[int]] = None,
    next_diagram: Optional[Sequence[int]] = None,
) -> str:
    """y(t) with the conventional t/sqrt(k) arguments when the shift is 2k.

    If the two ladder diagrams are given, the log-derivative form is used;
    otherwise the explicit rational function in t is printed.
    """
    k = int(1 / inst.c_sq)
    arg = "t" if k == 1 else r"t/\sqrt{%d}" % k
    if prev_diagram is None or next_diagram is None:
        return "y(t) = " + ratfunc_latex(inst.y_of_t(), "t")
    # coefficient of t in y: c^2 (lin - delta/2) with lin recovered from u
    delta = 2 / inst.c_sq
    lin_coeff = inst.c_sq * (inst.u.num.coeff(inst.u.den.degree + 1) / inst.u.den.leading)
    head = "" if lin_coeff == 0 else frac_latex(lin_coeff) + "t + "
    top = _wronskian_symbol("H", _diagram_label(prev_diagram), arg)
    bot = _wronskian_symbol("H", _diagram_label(next_diagram), arg)
    return r"y(t) = %s\frac{d}{dt}\log\frac{%s}{%s}" % (head, top, bot)


def pv_latex(inst: PVInstance) -> str:
    return "y(t) = " + ratfunc_latex(inst.y, "t") + (
        r",\quad (a,b,c,d) = \left(%s,\,%s,\,%s,\,%s\right)"
        % (
            frac_latex(inst.a),
            frac_latex(inst.b),
            frac_latex(inst.c),
            frac_latex(inst.d),
        )
    )
