import itertools
from fractions import Fraction as F

import pytest

from dresschain.chain import (
    DEFAULT_ALPHA_SAMPLES,
    OddPeriodRequired,
    UnsupportedOmega,
    alpha_sampled_verify,
    build_even_chain,
    build_odd_chain,
    chain_parameters,
    potential_of,
    verify_chain,
)
from dresschain.exact import Polynomial, RationalFunction
from dresschain.maya import (
    AmplitudeMismatch,
    CyclicStructure,
    DegenerateStructure,
    MayaDiagram,
)
from dresschain.orthopoly import AlphaParam

EMPTY = MayaDiagram(())
X = Polynomial.x()
ALPHA = AlphaParam(F(1, 3))


def test_one_step_chain():
    sol = build_odd_chain(CyclicStructure(k=1))
    assert sol.period == 1 and sol.delta == 2
    assert sol.terms[0].rational_part() == RationalFunction(X)
    report = verify_chain(sol)
    assert report.ok
    assert report.equations[0].value == -2  # eps_11 minus the shift


def test_two_step_chain_closed_form():
    sol = build_even_chain(CyclicStructure(k=1), CyclicStructure(k=1), ALPHA)
    a = ALPHA.value
    assert sol.delta == 4
    assert sol.expected_eps == (4 * a, -4 * a - 4)
    v1 = sol.terms[0].rational_part()
    v2 = sol.terms[1].rational_part()
    assert v1 == RationalFunction(Polynomial((-(a + F(1, 2)), 1)))
    assert v2 == RationalFunction(Polynomial((a + F(1, 2), 1)))
    assert verify_chain(sol).ok


def test_three_step_gh_chain_residuals():
    cs = CyclicStructure(k=1, second_type=((1, 2),))
    sol = build_odd_chain(cs)
    report = verify_chain(sol)
    assert report.ok
    assert sol.expected_eps == (F(-2), F(-4), F(4))
    delta, eps = chain_parameters(sol)
    assert delta == 2 and eps == sol.expected_eps
    # states (1,2) -> (0,1,2) -> (0,2) -> (0,2,3) under the default order
    assert [pw.poly.degree for pw in sol.ladder] == [2, 0, 1, 2]


def test_three_step_permutation_independence():
    structures = [
        CyclicStructure(k=1, second_type=((lam, mu),))
        for lam in (1, 2)
        for mu in (1, 2)
    ] + [
        CyclicStructure(k=3, okamoto=(a1, a2))
        for a1 in (0, 1, 2)
        for a2 in (0, 1, 2)
    ]
    for cs in structures:
        for perm in itertools.permutations(range(3)):
            sol = build_odd_chain(cs, perm=perm)
            assert verify_chain(sol).ok, (cs, perm)


def test_inverse_x_coefficients_follow_flip_signs():
    # first-slot flips: positive gives lin = -omega/2, negative +omega/2
    cs1 = CyclicStructure(k=1, second_type=((1, 2),))
    sol = build_even_chain(cs1, CyclicStructure(k=1), ALPHA)
    for term, flip in zip(sol.terms, sol.chain_labels.flips):
        assert term.lin == -flip.sign * sol.omega / 2


def test_degenerate_structure_refused_then_allowed():
    cs = CyclicStructure(k=3, okamoto=(1, 1), second_type=((4, 1),))
    with pytest.raises(DegenerateStructure):
        build_odd_chain(cs)
    sol = build_odd_chain(cs, allow_degenerate=True)
    assert sol.period == 5
    assert verify_chain(sol).ok
    # the colliding level-4 flips carry opposite dynamic signs
    signs = [f.sign for f in sol.chain_labels.flips if f.level == 4]
    assert sorted(signs) == [-1, 1]


def test_even_chain_accepts_degenerate_layouts():
    # even builders have no degeneracy gate: the replay still closes and
    # every Darboux step keeps its seed energy
    cs1 = CyclicStructure(k=1, second_type=((1, 1), (2, 2)))  # merging blocks
    assert cs1.is_degenerate
    sol = build_even_chain(cs1, CyclicStructure(k=1), ALPHA)
    assert verify_chain(sol).ok


def test_even_chain_table_3_1():
    cs1 = CyclicStructure(k=1, second_type=((1, 1),))
    sol = build_even_chain(cs1, CyclicStructure(k=1), ALPHA, perm=(1, 2, 0, 3))
    a = ALPHA.value
    assert sol.delta == 4
    assert sol.expected_eps == (F(-4), F(8), 4 * a, 4 * (-2 - a))
    assert verify_chain(sol).ok


def test_even_chain_interleaved_slots():
    # slot order is free: interleave the shadow flip among the others
    cs1 = CyclicStructure(k=1, second_type=((1, 1),))
    sol = build_even_chain(cs1, CyclicStructure(k=1), ALPHA, perm=(1, 3, 2, 0))
    assert verify_chain(sol).ok


def test_even_chain_errors():
    with pytest.raises(AmplitudeMismatch):
        build_even_chain(
            CyclicStructure(k=1), CyclicStructure(k=3, okamoto=(0, 0)), ALPHA
        )
    with pytest.raises(UnsupportedOmega):
        build_even_chain(
            CyclicStructure(k=1), CyclicStructure(k=1), ALPHA, omega=F(3)
        )
    with pytest.raises(OddPeriodRequired):
        build_odd_chain(CyclicStructure(k=2, okamoto=(1,)))
    with pytest.raises(UnsupportedOmega):
        build_odd_chain(CyclicStructure(k=1), omega=F(1))


def test_broken_chain_reports_not_ok():
    sol = build_odd_chain(CyclicStructure(k=1, second_type=((1, 2),)))
    wrong = sol.expected_eps[:1] + (sol.expected_eps[1] + 1,) + sol.expected_eps[2:]
    tampered = type(sol)(
        period=sol.period,
        delta=sol.delta,
        omega=sol.omega,
        terms=sol.terms,
        expected_eps=wrong,
        ladder=sol.ladder,
        chain_labels=sol.chain_labels,
    )
    report = verify_chain(tampered)
    assert not report.ok
    eq = report.equations[1]
    assert eq.residual_constant and eq.value == sol.expected_eps[1] and not eq.match


def test_broken_ladder_fails_sum_rule():
    sol = build_odd_chain(CyclicStructure(k=1, second_type=((1, 2),)))
    bad_last = sol.ladder[:-1] + (sol.ladder[1],)  # closure degree mismatch
    tampered = type(sol)(
        period=sol.period,
        delta=sol.delta,
        omega=sol.omega,
        terms=sol.terms,
        expected_eps=sol.expected_eps,
        ladder=bad_last,
        chain_labels=sol.chain_labels,
    )
    report = verify_chain(tampered)
    assert not report.sum_rule and not report.ok


def test_report_json_schema():
    sol = build_even_chain(CyclicStructure(k=1), CyclicStructure(k=1), ALPHA)
    data = verify_chain(sol).to_json()
    assert set(data) == {"period", "delta", "equations", "sum_rule"}
    assert data["delta"] == "4/1"
    assert all(
        set(eq) == {"residual_constant", "value", "expected", "match"}
        for eq in data["equations"]
    )
    assert data["sum_rule"] is True


def test_potential_of_examples():
    x_sq = Polynomial((0, 0, 1))
    assert potential_of(EMPTY).rational.is_zero
    assert potential_of(MayaDiagram((1,))).rational == RationalFunction(
        Polynomial.constant(2), x_sq
    )
    for m in (1, 2, 3, 4):
        staircase = MayaDiagram(tuple(range(1, 2 * m, 2)))
        parts = potential_of(staircase)
        assert parts.rational == RationalFunction(
            Polynomial.constant(m * (m + 1)), x_sq
        )
    parts = potential_of(MayaDiagram((1, 3)), omega=F(4))
    assert parts.rational == RationalFunction(Polynomial.constant(6), x_sq)
    assert parts.harmonic_coeff == 4 and parts.constant == 6


def test_alpha_sampled_verify():
    report = alpha_sampled_verify(
        CyclicStructure(k=1, second_type=((1, 1),)),
        CyclicStructure(k=1),
        perm=(1, 2, 0, 3),
    )
    assert report.ok and len(report.reports) == 5
    assert report.samples == DEFAULT_ALPHA_SAMPLES
    with pytest.raises(ValueError):
        alpha_sampled_verify(
            CyclicStructure(k=1),
            CyclicStructure(k=1),
            samples=[ALPHA, AlphaParam(F(1, 3))],
        )


def test_wterm_invariants():
    sol = build_odd_chain(CyclicStructure(k=1, second_type=((1, 2),)))
    for term in sol.terms:
        assert term.inv == 0 and term.variable_map == "x"
        assert term.lin in (F(1), F(-1))
    sol = build_even_chain(CyclicStructure(k=1), CyclicStructure(k=1), ALPHA)
    assert [t.variable_map for t in sol.terms] == ["x2", "x2"]
