from fractions import Fraction as Q
import random

import pytest
from hypothesis import given, settings, strategies as st

from rootcert.arith import (
    DimensionError,
    add,
    cone_is_trivial,
    dot,
    format_rational,
    lincomb,
    lp_maximize,
    nullspace,
    parse_rational,
    rank,
    restrict_to_kernel,
    solve_linear,
    solve_strict_positive,
    vec,
)

import oracles

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def small_int_rows(rng, nrows, dim, span=3):
    return [tuple(Q(rng.randint(-span, span)) for _ in range(dim)) for _ in range(nrows)]


# --- parsing and formatting


def test_rational_strings_round_trip():
    assert parse_rational("6/4") == Q(3, 2)
    assert format_rational(Q(3, 2)) == "3/2"
    assert format_rational(Q(-4, 2)) == "-2"
    assert parse_rational(" -7 ") == Q(-7)


def test_booleans_are_not_rationals():
    with pytest.raises(TypeError):
        parse_rational(True)


@given(rationals)
def test_format_parse_inverse(x):
    assert parse_rational(format_rational(x)) == x
    assert x.denominator > 0


@given(rationals, rationals, rationals)
def test_addition_is_exactly_associative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_frame_mismatch_is_a_dimension_error():
    with pytest.raises(DimensionError):
        add(vec(1, 2), vec(1, 2, 3))
    with pytest.raises(DimensionError):
        solve_strict_positive([vec(1, 0)], vec(1, 0, 0))


# --- rank and linear solves


def test_rank_examples():
    assert rank([vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)]) == 3
    assert rank([vec(0, 0, 0, 0), vec(0, 0, 0, 0)]) == 0
    assert rank([vec(1, -1, 0), vec(0, 1, -1), vec(1, 0, -1)]) == 2


@settings(max_examples=150)
@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_plain_elimination(rows):
    rows = [tuple(r) for r in rows]
    assert rank(rows) == oracles.rank(rows)


@settings(max_examples=100)
@given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=1, max_size=3))
def test_nullspace_is_annihilated_and_complementary(rows):
    rows = [tuple(r) for r in rows]
    ker = nullspace(rows, 4)
    assert len(ker) == 4 - rank(rows)
    for x in ker:
        assert all(dot(r, x) == 0 for r in rows)
    if ker:
        assert rank(ker) == len(ker)


@settings(max_examples=100)
@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(rationals, min_size=4, max_size=4))
def test_solve_linear_reconstructs_reachable_targets(cols, coeffs):
    cols = [tuple(c) for c in cols]
    target = lincomb(coeffs[: len(cols)], cols)
    c = solve_linear(cols, target)
    assert c is not None
    assert lincomb(c, cols) == target


# --- linear programs


def test_lp_simple_optimum():
    # max x + y subject to x + 2y + s1 = 4, 3x + y + s2 = 6
    res = lp_maximize([[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6], [1, 1, 0, 0])
    assert res.status == "optimal"
    assert res.value == Q(14, 5)


def test_lp_infeasible_and_unbounded():
    assert lp_maximize([[1, 1]], [-1], [0, 0]).status == "infeasible"
    assert lp_maximize([[1, -1]], [0], [1, 0]).status == "unbounded"


def test_solve_strict_positive_examples():
    m, slack = solve_strict_positive([vec(1, 0), vec(0, 1)], vec(2, 3))
    assert m == (2, 3) and slack == 2
    m, slack = solve_strict_positive([vec(1, 1), vec(1, -1)], vec(1, 0))
    assert m == (Q(1, 2), Q(1, 2)) and slack == Q(1, 2)
    assert solve_strict_positive([vec(1, 0), vec(0, 1)], vec(-1, 0)) is None


def test_strict_positive_needs_no_norm_bound():
    # every strictly positive solution has m_2 >= 1000, far above any norm-based cap
    sol = solve_strict_positive([vec(1, 0), vec(-1, Q(1, 1000))], vec(0, 1))
    assert sol is not None
    m, _ = sol
    assert lincomb(m, [vec(1, 0), vec(-1, Q(1, 1000))]) == vec(0, 1)


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_strict_positive_soundness(cols, target):
    dim = len(cols[0])
    cols = [tuple(Q(x) for x in (c + [0, 0, 0])[:dim]) for c in cols]
    target = tuple(Q(x) for x in target[:dim])
    sol = solve_strict_positive(cols, target)
    if sol is not None:
        m, slack = sol
        assert lincomb(m, cols) == target
        assert slack > 0 and all(x >= slack for x in m) and min(m) == slack


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=4),
       st.lists(st.fractions(min_value=Q(1, 8), max_value=2, max_denominator=8), min_size=4, max_size=4))
def test_strict_positive_completeness_on_planted_solutions(cols, m):
    cols = [tuple(Q(x) for x in c) for c in cols]
    target = lincomb(m[: len(cols)], cols)
    assert solve_strict_positive(cols, target) is not None


def test_strict_positive_agrees_with_grid_enumeration():
    rng = random.Random(7)
    values = oracles.positive_grid(max_den=8, max_val=1)
    checked = 0
    for trial in range(60):
        cols = small_int_rows(rng, rng.randint(1, 3), 2, span=2)
        if trial % 2:
            target = lincomb([rng.choice(values) for _ in cols], cols)
        else:
            target = tuple(Q(rng.randint(-3, 3)) for _ in range(2))
        found = oracles.brute_strict_positive(cols, target, values)
        sol = solve_strict_positive(cols, target)
        if found is not None:
            assert sol is not None, (cols, target, found)
            checked += 1
        if sol is not None:
            assert lincomb(sol[0], cols) == target
    assert checked >= 20


# --- cones


def test_cone_examples():
    assert cone_is_trivial([vec(1, 0), vec(-1, 0), vec(0, 1), vec(0, -1)])
    assert not cone_is_trivial([vec(1, 0)])
    assert cone_is_trivial([], dim=0)
    assert not cone_is_trivial([], dim=2)


def test_cone_simplex_is_trivial():
    # the three vertices of a triangle around the origin
    assert cone_is_trivial([vec(1, 0), vec(0, 1), vec(-1, -1)])
    assert not cone_is_trivial([vec(1, 0), vec(0, 1), vec(1, 1)])


def test_cone_agrees_with_ray_and_grid_oracle():
    rng = random.Random(20240611)
    instances = 0
    trivial = 0
    for _ in range(150):
        dim = rng.randint(1, 3)
        rows = small_int_rows(rng, rng.randint(1, 5), dim)
        got = cone_is_trivial(rows, dim)
        assert got == (not oracles.cone_has_nonzero_point(rows, dim)), rows
        assert got == oracles.cone_trivial_by_row_lps(rows, dim), rows
        instances += 1
        trivial += got
    assert instances >= 100
    assert 0 < trivial < instances


def test_restrict_to_kernel():
    rows, dim = restrict_to_kernel([vec(1, 0)], vec(1, 1))
    assert dim == 1
    # on the line x + y = 0 the form x takes both signs
    assert not cone_is_trivial(rows, dim)
    rows, dim = restrict_to_kernel([vec(1, 0), vec(0, 1)], vec(1, 1))
    assert cone_is_trivial(rows, dim)
