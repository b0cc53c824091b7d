"""Equation-system construction and exact rational solving."""

from fractions import Fraction

import pytest

from qsteiner.counting import count_D, count_N, covering_coefficient, gaussian
from qsteiner.designs import construct_uniform_design
from qsteiner.equations import (FULL_SYSTEM_GUARD, NonIntegralSolution,
                                build_full, build_uniform, evaluate,
                                family_system_params, solve,
                                uniform_family_solution)
from qsteiner.field import make_field
from qsteiner.subspaces import contains


def test_uniform_system_shape():
    us = build_uniform(2, 2, 3, 7, 4)
    assert us.s_values == (0, 1, 2)
    assert us.r_values == (0, 1, 2, 3)
    us1 = build_uniform(2, 2, 3, 7, 1)
    assert us1.s_values == (0, 1) and us1.r_values == (0, 1)
    # p = 1 forces s >= t-1 and r >= k-1
    us6 = build_uniform(2, 2, 3, 7, 6)
    assert us6.s_values == (1, 2) and us6.r_values == (2, 3)


def test_uniform_system_coefficients_are_products():
    us = build_uniform(2, 2, 3, 7, 4)
    for s, row in zip(us.s_values, us.matrix):
        for r, coeff in zip(us.r_values, row):
            if r < s:
                assert coeff == 0
            else:
                assert coeff == count_D(s, r, 4, 2) * covering_coefficient(s, 2, r, 3, 2)
        assert us.rhs[us.s_values.index(s)] == count_N(s, 4, 2, 7, 2)


def test_worked_full_example():
    """The 5-times-punctured binary system on F_2^2 has the unique
    solution (5, 40, 40, 40, 256)."""
    fs = build_full(2, 2, 3, 7, 2)
    assert len(fs.subjects) == 5 and len(fs.variables) == 5
    out = solve(fs)
    assert out.status == "unique" and out.nonneg_integer
    values = [out.assignment[y] for y in fs.variables]
    assert values == [5, 40, 40, 40, 256]


def test_uniform_pinned_solutions():
    out = solve(build_uniform(2, 2, 3, 7, 4), {0: 1})
    assert out.status == "unique" and out.nonneg_integer
    assert [out.assignment[r] for r in (0, 1, 2, 3)] == [1, 0, 4, 16]

    out = solve(build_uniform(2, 2, 3, 7, 1), {0: 45})
    assert out.status == "unique"
    assert out.assignment[1] == 336


def test_pin_of_unknown_variable():
    with pytest.raises(KeyError):
        solve(build_uniform(2, 2, 3, 7, 6), {1: 0})


def test_inconsistent_detected_exactly():
    out = solve(build_uniform(2, 2, 3, 7, 4), {0: 1, 2: 5})
    assert out.status == "inconsistent"
    assert out.assignment == {}


def test_underdetermined_full_system():
    fs = build_full(2, 2, 3, 7, 4)
    out = solve(fs)
    assert out.status == "underdetermined"
    # 51 independent equations on 66 unknowns
    assert len(out.free_keys) == len(fs.variables) - len(fs.subjects)
    # the particular solution satisfies every equation exactly
    for row, b in zip(fs.matrix, fs.rhs):
        lhs = sum(Fraction(c) * out.assignment[y]
                  for c, y in zip(row, fs.variables))
        assert lhs == b
    # each free-basis vector solves the homogeneous system exactly
    assert set(out.free_basis) == set(out.free_keys)
    for vec in out.free_basis.values():
        for row in fs.matrix:
            assert sum(Fraction(c) * vec[y]
                       for c, y in zip(row, fs.variables)) == 0


def test_solver_residuals_zero_on_uniform():
    for q, t, k, n, m, pin in ((2, 2, 3, 7, 4, 1), (3, 3, 4, 8, 4, 1)):
        us = build_uniform(q, t, k, n, m)
        out = solve(us, {0: pin})
        assert out.status == "unique"
        for row, b in zip(us.matrix, us.rhs):
            lhs = sum(Fraction(c) * out.assignment[r]
                      for c, r in zip(row, us.r_values))
            assert lhs == b


def test_full_system_counts_match_lemmas():
    """Equation and variable totals per the counting lemmas, q=2, m <= 4."""
    for m in range(1, 5):
        fs = build_full(2, 2, 3, 7, m)
        params = fs.params
        assert len(fs.subjects) == sum(gaussian(m, s, 2) for s in params.s_range())
        assert len(fs.variables) == sum(gaussian(m, r, 2) for r in params.r_range())
        # nonzero coefficients per equation: sum over r of D_{s,r,m}
        for x, row in zip(fs.subjects, fs.matrix):
            s = x.dim
            nonzero = sum(1 for c in row if c)
            expected = sum(count_D(s, r, m, 2) for r in params.r_range()
                           if r >= s and covering_coefficient(s, 2, r, 3, 2))
            assert nonzero == expected


def test_full_system_coefficient_placement():
    fs = build_full(2, 2, 3, 7, 2)
    for x, row in zip(fs.subjects, fs.matrix):
        for y, c in zip(fs.variables, row):
            if c:
                assert contains(y, x)
                assert c == covering_coefficient(x.dim, 2, y.dim, 3, 2)


def test_full_system_guard():
    with pytest.raises(ValueError):
        build_full(2, 2, 3, 17, 14)


def test_uniform_to_full_consistency():
    """A constant assignment per dimension satisfies the full system."""
    # pins giving the integral uniform solution of S_2(2,3,7;m)
    pins = {2: 5, 3: 1, 4: 1}
    for m, pin in pins.items():
        us = build_uniform(2, 2, 3, 7, m)
        uout = solve(us, {us.r_values[0]: pin})
        assert uout.status == "unique" and uout.nonneg_integer
        assignment = {r: int(uout.assignment[r]) for r in us.r_values}
        design = construct_uniform_design(2, 2, 3, 7, m, assignment)
        ev = evaluate(build_full(2, 2, 3, 7, m), design)
        assert ev.ok and all(r == 0 for r in ev.residuals)


def test_evaluate_reports_residuals_and_mismatch():
    fs = build_full(2, 2, 3, 7, 4)
    good = construct_uniform_design(2, 2, 3, 7, 4, {0: 1, 1: 0, 2: 4, 3: 16})
    rep = evaluate(fs, good)
    assert rep.ok and rep.total_multiplicity == 381

    block = next(b for b in good.blocks if b.dim == 3)
    bad = good.with_block_multiplicity(block, 15)
    rep = evaluate(fs, bad)
    assert not rep.ok
    # exactly the equations for s-subspaces inside the mutated block fail,
    # each short by one covering coefficient
    for v in rep.violations:
        assert contains(block, v.subject)
        assert v.expected - v.got == covering_coefficient(v.s, 2, 3, 3, 2)
    assert len(rep.violations) == sum(
        1 for x in fs.subjects if contains(block, x)
        and covering_coefficient(x.dim, 2, 3, 3, 2))


def test_evaluate_empty_design_residuals():
    fs = build_full(2, 2, 3, 7, 2)
    from qsteiner.designs import DesignMultiset
    empty = DesignMultiset(fs.params, {})
    rep = evaluate(fs, empty)
    assert not rep.ok
    assert list(rep.residuals) == [-b for b in fs.rhs]


def test_evaluate_parameter_mismatch():
    fs = build_full(2, 2, 3, 7, 2)
    other = construct_uniform_design(2, 2, 3, 7, 4, {0: 1, 1: 0, 2: 4, 3: 16})
    with pytest.raises(ValueError):
        evaluate(fs, other)


def test_streaming_verifier_agrees_with_materialized_system():
    """The streaming verifier and the materialized full system compute
    identical residual vectors (equations share one canonical order)."""
    from qsteiner.designs import verify
    good = construct_uniform_design(2, 2, 3, 7, 4, {0: 1, 1: 0, 2: 4, 3: 16})
    block = next(b for b in good.blocks if b.dim == 2)
    bad = good.with_block_multiplicity(block, 7)
    fs = build_full(2, 2, 3, 7, 4)
    for design in (good, bad):
        streamed = verify(design)
        materialized = evaluate(fs, design)
        assert streamed.residuals == materialized.residuals
        assert streamed.ok == materialized.ok


# ---------------------------------------------------------------------------
# published closed forms
# ---------------------------------------------------------------------------

def test_families_match_solver():
    """Every closed-form family is the exact pinned solution of its
    uniform system, for q in {2, 3}."""
    named = ("S(2,3,7;4)", "S(3,4,8;4)", "S(4,5,11;6)", "S(5,6,12;6)")
    for q in (2, 3):
        for name in named:
            fam = uniform_family_solution(name, q)
            t, k, n, m = family_system_params(name)
            out = solve(build_uniform(q, t, k, n, m), {0: fam[0]})
            assert out.status == "unique" and out.nonneg_integer
            assert {r: int(v) for r, v in out.assignment.items()} == fam


def test_family_2_3_odd_values():
    for q in (2, 3):
        for k in (3, 7, 9):
            fam = uniform_family_solution("S(2,3,2k+1;k+1)", q, k=k)
            assert fam[0] == gaussian(k, 2, q) // gaussian(3, 2, q)
            assert fam[1] == 0
            assert fam[2] == q ** (k - 1)
            assert fam[3] == q ** (k + 1) * (q - 1)
            t, kk, n, m = family_system_params("S(2,3,2k+1;k+1)", k=k)
            out = solve(build_uniform(q, t, kk, n, m), {0: fam[0]})
            assert out.status == "unique"
            assert {r: int(v) for r, v in out.assignment.items()} == fam


def test_family_2_3_odd_at_k3_is_fano_m4():
    for q in (2, 3):
        assert (uniform_family_solution("S(2,3,2k+1;k+1)", q, k=3)
                == uniform_family_solution("S(2,3,7;4)", q))


def test_family_congruence_conditions():
    with pytest.raises(ValueError):
        uniform_family_solution("S(2,3,2k+1;k+1)", 2, k=5)
    with pytest.raises(ValueError):
        uniform_family_solution("S(3,4,2k;k)", 2, k=5)
    with pytest.raises(ValueError):
        uniform_family_solution("S(3,4,2k;k)", 2, k=6)
    with pytest.raises(ValueError):
        uniform_family_solution("S(2,3,2k+1;k+1)", 2)
    with pytest.raises(ValueError):
        uniform_family_solution("no-such-family", 2)


def test_family_3_4_even_integral_only_at_k4():
    for q in (2, 3):
        fam = uniform_family_solution("S(3,4,2k;k)", q, k=4)
        assert fam == uniform_family_solution("S(3,4,8;4)", q)
        for k in (8, 10):
            with pytest.raises(NonIntegralSolution):
                uniform_family_solution("S(3,4,2k;k)", q, k=k)
            # the pinned uniform system still solves uniquely, just not
            # over the nonnegative integers
            out = solve(build_uniform(q, 3, 4, 2 * k, k),
                        {0: Fraction(gaussian(k, 3, q), gaussian(4, 3, q))})
            assert out.status == "unique"
            assert not out.nonneg_integer
            assert out.assignment[4].denominator > 1


def test_fano_m6_uniform_system_has_no_integral_solution():
    """The once-punctured binary q-Fano equations force X_2 = 1/31."""
    out = solve(build_uniform(2, 2, 3, 7, 6))
    assert out.status == "unique"
    assert out.assignment[2] == Fraction(1, 31)
    assert not out.nonneg_integer
