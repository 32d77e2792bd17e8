from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fusionkit.char_ring import LaurentPolynomial as LP
from fusionkit.char_ring import act, antisymmetrize, ideal_generators, weyl_denominator
from fusionkit.errors import ZeroLevel
from fusionkit.root_system import root_system
from fusionkit.weyl_group import generate

SMALL = ["A1", "A2", "A3", "B2", "C2", "C3", "G2", "B3"]


def polys(rank, max_terms=4, spread=4):
    exps = st.tuples(*[st.integers(-spread, spread)] * rank)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(lambda t: LP(rank, t))


@st.composite
def type_and_polys(draw, k=1):
    name = draw(st.sampled_from(SMALL))
    rs = root_system(name)
    return (name,) + tuple(draw(polys(rs.rank)) for _ in range(k))


@given(type_and_polys(3))
def test_ring_axioms(data):
    _, p, q, r = data
    rank = p.rank
    assert p * q == q * p
    assert p * LP.one(rank) == p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == LP.zero(rank)
    assert all(c != 0 for c in (p * q).terms.values())


@given(type_and_polys(1), st.data())
def test_action_axiom(data, draw):
    name, p = data
    W = generate(root_system(name))
    i = draw.draw(st.integers(0, len(W) - 1))
    j = draw.draw(st.integers(0, len(W) - 1))
    for signed in (False, True):
        assert act(W[i], act(W[j], p, signed), signed) == act(W[W.multiply(i, j)], p, signed)


@given(type_and_polys(2), st.data())
def test_unsigned_action_is_ring_automorphism(data, draw):
    name, p, q = data
    W = generate(root_system(name))
    w = W[draw.draw(st.integers(0, len(W) - 1))]
    assert act(w, p * q) == act(w, p) * act(w, q)


@given(type_and_polys(1), st.data())
def test_antisymmetrize_sign_rule(data, draw):
    name, p = data
    W = generate(root_system(name))
    w = W[draw.draw(st.integers(0, len(W) - 1))]
    a = antisymmetrize(W, p)
    assert antisymmetrize(W, act(w, p)) == a * w.sign
    assert all(act(u, a, signed=True) == a for u in W)


@given(st.sampled_from(SMALL), st.data())
def test_stabilized_weights_vanish(name, draw):
    rs = root_system(name)
    W = generate(rs)
    i = draw.draw(st.integers(0, rs.rank - 1))
    f = list(draw.draw(st.tuples(*[st.integers(-5, 5)] * rs.rank)))
    f[i] = 0
    assert antisymmetrize(W, LP.monomial(f)).is_zero()


def test_action_examples():
    W = generate(root_system("A1"))
    ident, s = W[0], W[1]
    p = LP.monomial((3,), 2) + LP.monomial((-1,), Fraction(1, 3))
    assert act(ident, p, signed=True) == p
    assert act(s, LP.monomial((1,))) == LP.monomial((-1,))
    assert act(s, LP.monomial((1,)), signed=True) == -LP.monomial((-1,))


def test_antisymmetrize_examples():
    W = generate(root_system("A1"))
    assert antisymmetrize(W, LP.one(1)).is_zero()
    assert antisymmetrize(W, LP.monomial((1,))) == LP(1, {(1,): 1, (-1,): -1})
    for n in range(1, 6):
        assert antisymmetrize(W, LP.monomial((n,))) == LP(1, {(n,): 1, (-n,): -1})


def test_weyl_denominator_a1_a2():
    assert weyl_denominator(root_system("A1")) == LP(1, {(1,): 1, (-1,): -1})
    # frozen by hand-expanding theta_{-rho} (x-1)(y-1)(z-1), x,y,z the positive roots
    a2 = LP(2, {(1, 1): 1, (2, -1): -1, (-1, 2): -1, (1, -2): 1, (-2, 1): 1, (-1, -1): -1})
    d = weyl_denominator(root_system("A2"))
    assert d == a2 and len(d) == 6 and {abs(c) for c in d.terms.values()} == {1}


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"])
def test_weyl_denominator_formula(name):
    rs = root_system(name)
    W = generate(rs)
    d = weyl_denominator(rs)
    assert d == antisymmetrize(W, LP.monomial(rs.rho))
    assert len(d) == len(W)


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "F4"])
def test_weyl_denominator_signed_invariant_rank4(name):
    rs = root_system(name)
    W = generate(rs)
    d = weyl_denominator(rs)
    assert all(act(w, d, signed=True) == d for w in W)


def test_ideal_generators():
    assert ideal_generators(root_system("A1"), 3) == [LP(1, {(6,): 1, (0,): -1})]
    for n in (1, 2, 5, -4):
        (g,) = ideal_generators(root_system("A1"), n)
        assert g == LP(1, {(2 * n,): 1, (0,): -1})
    c2 = root_system("C2")
    two_a1 = tuple(2 * x for x in c2.simple_roots_w[0])
    assert ideal_generators(c2, 1) == [LP.monomial(two_a1) - 1, LP.monomial(c2.simple_roots_w[1]) - 1]
    with pytest.raises(ZeroLevel):
        ideal_generators(c2, 0)


def test_render():
    a1 = LP(1, {(1,): 1, (-1,): -1})
    assert a1.render("A") == "-x₁^-1 + x₁"
    assert LP.zero(2).render() == "0"
    p = LP(2, {(1, 0): Fraction(1, 2), (0, 0): -3})
    assert p.render("C") == "-3 + 1/2·θ^(1,0)"
    # omega_1 of A2 is x_1, omega_2 is x_1 x_2
    assert LP.monomial((0, 1)).render("A") == "x₁·x₂"


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        LP(2, {(1,): 1})
