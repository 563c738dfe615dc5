import itertools
from fractions import Fraction as F

import pytest

from dresschain.chain import build_even_chain, build_odd_chain
from dresschain.exact import Polynomial, RationalFunction, log_derivative_ratio
from dresschain.maya import CyclicStructure, MayaDiagram
from dresschain.orthopoly import AlphaParam
from dresschain.painleve import (
    PIVInstance,
    PVInstance,
    WrongPeriod,
    ZeroDenominator,
    piv_families,
    piv_from_chain,
    piv_residual,
    pv_from_chain,
    pv_residual,
)
from dresschain.wronskian import hermite_wronskian

ALPHA = AlphaParam(F(1, 3))


def gh(lam, mu):
    return CyclicStructure(k=1, second_type=((lam, mu),))


def okamoto(a1, a2):
    return CyclicStructure(k=3, okamoto=(a1, a2))


def test_gh_family_parameters():
    fams = piv_families(gh(1, 2))
    assert fams[0].a == 3 and fams[0].b == -8  # -(1-mu-2lam), -2mu^2
    assert fams[0].c_sq == 1


def test_gh_families_solve_piv():
    for lam, mu in itertools.product((1, 2, 3), repeat=2):
        for inst in piv_families(gh(lam, mu)):
            assert piv_residual(inst).is_zero


def test_okamoto_family_parameters():
    fams = piv_families(okamoto(1, 1))
    assert fams[0].a == 2
    assert fams[0].b == F(-2, 9)
    assert fams[0].c_sq == F(1, 3)


def test_okamoto_families_solve_piv():
    for a1, a2 in itertools.product((0, 1, 2), repeat=2):
        for inst in piv_families(okamoto(a1, a2)):
            assert piv_residual(inst).is_zero


def test_smallest_gh_family():
    # single-seed ladder: the zero-flip family runs over H(1,1) = (1)
    fams = piv_families(gh(1, 1))
    assert hermite_wronskian(MayaDiagram((1,))).poly == Polynomial((0, 2))
    for inst in fams:
        assert piv_residual(inst).is_zero


def test_gh_y0_log_derivative_form():
    # first family: y = d/dt log of the block ladder, exactly
    for lam, mu in itertools.product((1, 2, 3), repeat=2):
        inst = piv_families(gh(lam, mu))[0]
        top = hermite_wronskian(MayaDiagram(tuple(range(lam, lam + mu)))).poly
        bot = hermite_wronskian(
            MayaDiagram(tuple(range(lam - 1, lam - 1 + mu)))
        ).poly
        assert inst.u == log_derivative_ratio(top, bot)
        assert inst.y_of_t() == inst.u  # c = 1 here


def test_piv_perturbation_detected():
    inst = piv_families(gh(1, 2))[0]
    delta = 2 / inst.c_sq
    bad = PIVInstance(u=inst.u, c_sq=inst.c_sq, a=inst.a, b=inst.b + 1)
    assert piv_residual(bad) == -(delta * delta / 4) / inst.u


def test_piv_wrong_scaling_has_no_parameters():
    # with the t-map printed the other way around (t = x sqrt(2/shift)),
    # no (a, b) make the Okamoto residual vanish: the equation itself
    # pins the corrected map
    inst = piv_families(okamoto(1, 1))[0]
    u, c2 = inst.u, inst.c_sq
    x = RationalFunction(Polynomial.x())
    c4 = c2 * c2
    du = u.derivative()
    base = (
        du.derivative()
        - du * du / (2 * u)
        - F(3, 2) * c4 * (u * u * u)
        - 4 * c4 * x * (u * u)
        - 2 * c4 * (x * x) * u
    )
    # residual(a, b) = base + 2 c2 a u - b/u; solve the 2x2 linear system
    # from two sample points and check it fails elsewhere
    pts = [F(1), F(2)]
    rows = [
        (-2 * c2 * u.eval_at(t), (1 / u).eval_at(t), base.eval_at(t)) for t in pts
    ]
    det = rows[0][0] * rows[1][1] - rows[1][0] * rows[0][1]
    a = (rows[0][2] * rows[1][1] - rows[1][2] * rows[0][1]) / det
    b = (rows[0][0] * rows[1][2] - rows[1][0] * rows[0][2]) / det
    resid = base + 2 * c2 * a * u - b / u
    assert not resid.is_zero


def test_piv_wrong_period():
    sol = build_odd_chain(CyclicStructure(k=1))
    with pytest.raises(WrongPeriod):
        piv_from_chain(sol)
    with pytest.raises(WrongPeriod):
        piv_families(CyclicStructure(k=1))


def test_piv_zero_denominator():
    inst = piv_families(gh(1, 2))[0]
    bad = PIVInstance(u=RationalFunction.zero(), c_sq=inst.c_sq, a=inst.a, b=inst.b)
    with pytest.raises(ZeroDenominator):
        piv_residual(bad)


def test_piv_json():
    inst = piv_families(okamoto(1, 1))[0]
    data = inst.to_json()
    assert data["equation"] == "PIV" and data["variable"] == "t"
    assert data["residual_zero"] is True
    assert data["params"]["c_sq"] == "1/3"


# -- PV -------------------------------------------------------------------------


def pv_31(lam, mu, alpha):
    cs1 = CyclicStructure(k=1, second_type=((lam, mu),))
    sol = build_even_chain(
        cs1, CyclicStructure(k=1), alpha, perm=(1, 2, 0, 3)
    )
    return pv_from_chain(sol)


def pv_22(a1, b1, alpha):
    sol = build_even_chain(
        CyclicStructure(k=2, okamoto=(a1,)),
        CyclicStructure(k=2, okamoto=(b1,)),
        alpha,
        perm=(1, 0, 3, 2),
    )
    return pv_from_chain(sol)


def test_pv_31_parameters_and_residual():
    a = ALPHA.value
    inst = pv_31(1, 1, ALPHA)
    assert (inst.a, inst.b, inst.c, inst.d) == (
        F(1, 2), -a * a / 2, a + 4, F(-1, 2)
    )
    assert pv_residual(inst).is_zero


def test_pv_22_parameters_and_residual():
    alpha = AlphaParam(F(2, 5))
    a = alpha.value
    inst = pv_22(0, 0, alpha)
    assert (inst.a, inst.b, inst.c, inst.d) == (
        F(1, 8), F(-1, 8), 2 * (a + 1), F(-2)
    )
    assert pv_residual(inst).is_zero


def test_pv_sweep_residuals():
    for alpha_value in (F(1, 3), F(2, 5), F(7, 3)):
        alpha = AlphaParam(alpha_value)
        for lam, mu in itertools.product((1, 2), repeat=2):
            assert pv_residual(pv_31(lam, mu, alpha)).is_zero
        for a1, b1 in itertools.product((0, 1), repeat=2):
            assert pv_residual(pv_22(a1, b1, alpha)).is_zero


def test_pv_perturbation_detected():
    inst = pv_31(1, 1, ALPHA)
    bad = PVInstance(y=inst.y, a=inst.a, b=inst.b, c=inst.c + 1, d=inst.d)
    assert not pv_residual(bad).is_zero


def test_pv_wrong_period():
    sol = build_even_chain(CyclicStructure(k=1), CyclicStructure(k=1), ALPHA)
    with pytest.raises(WrongPeriod):
        pv_from_chain(sol)
    sol3 = build_odd_chain(CyclicStructure(k=1, second_type=((1, 1),)))
    with pytest.raises(WrongPeriod):
        pv_from_chain(sol3)


def test_pv_zero_solution_rejected():
    inst = pv_31(1, 1, ALPHA)
    with pytest.raises(ZeroDenominator):
        pv_residual(PVInstance(y=RationalFunction.zero(), a=inst.a, b=inst.b,
                               c=inst.c, d=inst.d))


def test_pv_json():
    inst = pv_22(1, 1, ALPHA)
    data = inst.to_json()
    assert data["equation"] == "PV"
    assert data["residual_zero"] is True
    assert set(data["params"]) == {"a", "b", "c", "d"}
