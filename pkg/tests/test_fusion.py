import itertools
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

import fusionkit.fusion as fusion
from fusionkit.abelian_quotient import build_quotient, project
from fusionkit.char_ring import LaurentPolynomial as LP
from fusionkit.char_ring import antisymmetrize, ideal_generators
from fusionkit.errors import MismatchReport, PreconditionViolated, TooLarge
from fusionkit.fusion import (
    GRAM_MAX,
    RankRow,
    RankTable,
    dim_perm_quotient,
    dim_sgn_quotient,
    eval_at_special_point,
    gram_matrix,
    gram_nonsingular,
    level_weights,
    phase_matrix,
    special_points,
    verlinde_check,
    verlinde_dimension,
    wall_vanishing,
    wall_weights,
)
from fusionkit.oracles import orbits, projector_rank
from fusionkit.root_system import root_system

from conftest import ROSTER


def test_level_weight_examples():
    for t in ROSTER:
        assert [a.m for a in level_weights(root_system(t), 0)] == [(0,) * root_system(t).rank]
    assert [a.m for a in level_weights(root_system("C2"), 1)] == [(0, 0), (0, 1), (1, 0)]
    with pytest.raises(PreconditionViolated):
        level_weights(root_system("A1"), -1)


@pytest.mark.parametrize("m", range(2, 6))
@pytest.mark.parametrize("k", range(0, 6))
def test_type_a_stars_and_bars(m, k):
    assert verlinde_dimension(root_system(f"A{m - 1}"), k) == comb(k + m - 1, m - 1)


@given(st.sampled_from(ROSTER + ("F4", "D4")), st.integers(0, 6))
def test_level_weights_brute_force(name, k):
    rs = root_system(name)
    brute = [
        m for m in itertools.product(range(k + 1), repeat=rs.rank)
        if sum(a * b for a, b in zip(m, rs.comarks)) <= k
    ]
    got = [a.m for a in level_weights(rs, k)]
    assert got == sorted(brute)
    assert all(a.level == k for a in level_weights(rs, k))


def test_dimension_examples(group):
    rs, W = group("A1")
    q = build_quotient(rs, 3)
    assert dim_sgn_quotient(rs, W, q) == 2
    assert dim_perm_quotient(rs, W, q) == 4
    for n in range(1, 9):
        q = build_quotient(rs, n)
        assert dim_perm_quotient(rs, W, q) == n + 1
        assert dim_sgn_quotient(rs, W, q) == n - 1
    assert verlinde_dimension(root_system("C2"), 1) == 3


def test_verlinde_check_examples(group):
    for name, n, dim in [("A1", 2, 1), ("A2", 3, 1), ("C2", 4, 3)]:
        rs, W = group(name)
        rep = verlinde_check(rs, W, n)
        assert rep.ok and rep.twisted_dim == rep.verlinde_dim == dim
        assert len(rep.basis) == dim and rep.k == n - rs.dual_coxeter
    rs, W = group("C2")
    with pytest.raises(PreconditionViolated):
        verlinde_check(rs, W, 2)


def test_verlinde_check_reports_mismatch(group, monkeypatch):
    rs, W = group("A2")
    monkeypatch.setattr(fusion, "dim_sgn_quotient", lambda *a, **k: 99)
    with pytest.raises(MismatchReport) as info:
        fusion.verlinde_check(rs, W, 4)
    assert info.value.exit_code == 4
    assert info.value.report.twisted_dim == 99 and info.value.report.verlinde_dim == 3


CASES = [(t, n) for t in ROSTER for n in range(1, root_system(t).dual_coxeter + 5)]


@pytest.mark.parametrize("name,n", CASES)
def test_dims_zero_below_h_dual_and_verlinde_above(name, n, group):
    rs, W = group(name)
    q = build_quotient(rs, n)
    sgn, perm = dim_sgn_quotient(rs, W, q), dim_perm_quotient(rs, W, q)
    if n < rs.dual_coxeter:
        assert sgn == 0
    else:
        assert sgn == verlinde_dimension(rs, n - rs.dual_coxeter)
    assert perm >= sgn >= 0


@pytest.mark.parametrize("name,n", CASES)
def test_dims_equal_projector_ranks(name, n, group):
    rs, W = group(name)
    q = build_quotient(rs, n)
    if q.order > 5000:
        pytest.skip("enumeration oracle limited to |Q_n| <= 5000")
    assert dim_sgn_quotient(rs, W, q) == projector_rank(q, W, signed=True)
    assert dim_perm_quotient(rs, W, q) == projector_rank(q, W, signed=False) == len(orbits(q, W))


def test_threads_do_not_change_results(group):
    rs, W = group("C3")
    a = build_quotient(rs, 6)
    b = build_quotient(rs, 6)
    assert dim_sgn_quotient(rs, W, a) == dim_sgn_quotient(rs, W, b, workers=4)
    assert dim_perm_quotient(rs, W, a) == dim_perm_quotient(rs, W, b, workers=4)


def test_wall_vanishing_examples(group):
    rs, W = group("A1")
    for n in range(2, 7):
        assert wall_vanishing(rs, W, build_quotient(rs, n), (n,))
    for name, n in [("C2", 4), ("A2", 3)]:
        rs, W = group(name)
        q = build_quotient(rs, n)
        pts = wall_weights(rs, n)
        assert pts and all(wall_vanishing(rs, W, q, f) for f in pts)
    with pytest.raises(PreconditionViolated):
        wall_vanishing(rs, W, q, (1, 0))


def test_off_wall_weights_generally_survive(group):
    # guard against a projection that kills everything
    rs, W = group("A2")
    q = build_quotient(rs, 5)
    assert project(q, antisymmetrize(W, LP.monomial((1, 1))))


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2", "B2"])
def test_wall_weights_negative_level(name, group):
    rs, W = group(name)
    n = -(rs.dual_coxeter + 1)
    q = build_quotient(rs, n)
    pts = wall_weights(rs, n)
    assert pts and all(wall_vanishing(rs, W, q, f) for f in pts)


def test_eval_examples():
    a1 = root_system("A1")
    (s,) = special_points(a1, 2)
    assert s.b == (1,)
    assert phase_matrix(a1) == ((Fraction(1, 2),),)
    assert eval_at_special_point(a1, LP.one(1), s) == 1
    v = eval_at_special_point(a1, LP(1, {(1,): 1, (-1,): 1}), s)
    assert abs(v) < 1e-12
    assert s.phase((1,)) == Fraction(1, 4) and s.phase((-1,)) == Fraction(3, 4)


@pytest.mark.parametrize("name", ROSTER)
def test_special_points_interior_and_generators_vanish(name):
    rs = root_system(name)
    for n in range(rs.dual_coxeter, rs.dual_coxeter + 5):
        pts = special_points(rs, n)
        assert len(pts) == verlinde_dimension(rs, n - rs.dual_coxeter)
        for s in pts:
            assert sum(b * c for b, c in zip(s.b, rs.comarks)) < n
            for g in ideal_generators(rs, n):
                assert abs(eval_at_special_point(rs, g, s)) < 1e-9


def test_special_points_are_w_regular(group):
    """Distinct points of S_k are not W-conjugate: A(theta_rho) is nonzero at each."""
    rs, W = group("C2")
    delta = antisymmetrize(W, LP.monomial(rs.rho))
    for s in special_points(rs, 6):
        assert abs(eval_at_special_point(rs, delta, s)) > 1e-6


def test_gram_examples(group):
    rs, W = group("A1")
    g = gram_matrix(rs, W, 2)
    assert g.shape == (1, 1) and abs(g[0, 0]) > 1
    assert abs(g[0, 0] - 2j) < 1e-12  # e^{i pi/2} - e^{-i pi/2}
    g5 = gram_matrix(rs, W, 5)
    assert g5.shape == (4, 4) and np.linalg.matrix_rank(g5) == 4
    assert gram_nonsingular(rs, W, 5)
    rs, W = group("A2")
    assert gram_matrix(rs, W, 4).shape == (3, 3) and gram_nonsingular(rs, W, 4)


def test_gram_matches_sine_formula(group):
    rs, W = group("A1")
    n = 6
    g = gram_matrix(rs, W, n)
    expect = np.array([[2j * np.sin(np.pi * a * b / n) for b in range(1, n)] for a in range(1, n)])
    assert np.allclose(g, expect)


def test_gram_limits(group):
    rs, W = group("A1")
    with pytest.raises(PreconditionViolated):
        gram_matrix(rs, W, 1)
    with pytest.raises(TooLarge):
        gram_matrix(rs, W, GRAM_MAX + 3)


def test_rank_table_roundtrip():
    t = RankTable(
        [RankRow("K-theory rank, even degree", 4, degree_mod_2=0), RankRow("x", 2, degree=3)],
        "A1", 3, "sphere", {"rank": 1, "h_dual": 2, "weyl_order": 2},
    )
    assert RankTable.from_dict(t.to_dict()) == t
    assert t.dims() == {0: 4, 3: 2}
