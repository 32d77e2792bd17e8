import pytest
from hypothesis import given, strategies as st

from fusionkit.abelian_quotient import build_quotient
from fusionkit.errors import InvalidInput, UnsupportedType, ZeroLevel
from fusionkit.fusion import dim_perm_quotient, dim_sgn_quotient, verlinde_dimension
from fusionkit.ktwist import (
    CohomologyProfile,
    WCharacter,
    builtin_profile,
    e2_dimension,
    e2_table,
    ktable,
    table_commuting_variety,
    table_inertia_sphere,
    table_point,
    table_su2_pairs,
)
from fusionkit.root_system import root_system
from fusionkit.weyl_group import generate

from conftest import ROSTER


def setup(group, name, n):
    rs, W = group(name)
    return rs, W, build_quotient(rs, n)


def test_e2_dimension_examples(group):
    rs, W, q = setup(group, "A1", 3)
    assert e2_dimension(rs, W, q, WCharacter.trivial(W)) == 2
    assert e2_dimension(rs, W, q, WCharacter.sign(W)) == 4


@pytest.mark.parametrize("name", ROSTER)
@pytest.mark.parametrize("offset", [-1, 0, 2])
def test_twist_identities(name, offset, group):
    rs, W = group(name)
    n = max(1, rs.dual_coxeter + offset)
    q = build_quotient(rs, n)
    assert e2_dimension(rs, W, q, WCharacter.trivial(W)) == dim_sgn_quotient(rs, W, q)
    assert e2_dimension(rs, W, q, WCharacter.sign(W)) == dim_perm_quotient(rs, W, q)


def test_point_examples(group):
    assert table_point(*setup(group, "A1", 4), 4).dims() == {0: 0, 1: 3}
    assert table_point(*setup(group, "A2", 4), 4).dims() == {0: 3, 1: 0}
    assert table_point(*setup(group, "A1", 2), 2).dims() == {0: 0, 1: 1}


def test_sphere_examples(group):
    assert table_inertia_sphere(*setup(group, "A1", 3), 3).dims() == {0: 4, 1: 2}
    rs, W, q = setup(group, "A2", 4)
    assert table_inertia_sphere(rs, W, q, 4).dims() == {0: dim_perm_quotient(rs, W, q) + 3, 1: 0}
    rs, W, q = setup(group, "C2", 3)
    assert dim_sgn_quotient(rs, W, q) == 1
    assert table_inertia_sphere(rs, W, q, 3).dims() == {0: dim_perm_quotient(rs, W, q) + 1, 1: 0}


def test_commuting_examples(group):
    a1 = setup(group, "A1", 3)
    assert table_commuting_variety(*a1, 3, 2).dims() == {0: 0, 1: 4}
    assert table_commuting_variety(*a1, 3, 3).dims() == {0: 4, 1: 2}
    rs, W, q = setup(group, "A2", 4)
    assert table_commuting_variety(rs, W, q, 4, 3).dims() == {0: dim_perm_quotient(rs, W, q) + 3, 1: 0}
    t = table_commuting_variety(rs, W, q, 4, 4)
    assert t.dims() == {0: 6, 1: 0} and t.meta["m"] == 4


def test_commuting_preconditions(group):
    for name in ("B2", "G2"):
        with pytest.raises(UnsupportedType):
            table_commuting_variety(*setup(group, name, 5), 5, 2)
    with pytest.raises(InvalidInput):
        table_commuting_variety(*setup(group, "A1", 3), 3, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_su2_pairs(n):
    assert table_su2_pairs(n).dims() == {0: n + 1, 1: n - 1}
    assert table_su2_pairs(-n).dims() == {0: n + 1, 1: n - 1}
    assert table_su2_pairs(-n).n == -n


def test_su2_pairs_rejects_zero_and_other_types(group):
    with pytest.raises(ZeroLevel):
        table_su2_pairs(0)
    with pytest.raises(UnsupportedType):
        ktable("su2-pairs", *setup(group, "A2", 3), 3)


def test_e2_table_examples(group):
    rs, W, q = setup(group, "A1", 3)
    assert e2_table(rs, W, q, CohomologyProfile.parse(W, "0:trivial,1:sign"), 3).dims() == {1: 2, 2: 4}
    point = e2_table(rs, W, q, builtin_profile("point", rs, W), 3, "point")
    assert point.dims() == {1: 2}
    assert all(r.label.startswith("E2 rank") for r in point.rows)
    rs, W, q = setup(group, "A2", 5)
    sphere = e2_table(rs, W, q, builtin_profile("sphere", rs, W), 5)
    assert sphere.dims() == {2: dim_sgn_quotient(rs, W, q), 4: dim_perm_quotient(rs, W, q)}


COLLAPSE = [(t, k, m) for t in ("A1", "A2", "A3", "C2", "C3") for k in range(0, 3) for m in (2, 3, 4)]


@pytest.mark.parametrize("name,k,m", COLLAPSE)
def test_collapse_consistency(name, k, m, group):
    rs, W = group(name)
    n = rs.dual_coxeter + k
    q = build_quotient(rs, n)
    spaces = ["point", "sphere", "commuting"] + (["su2-pairs"] if name == "A1" else [])
    for space in spaces:
        k_total = sum(ktable(space, rs, W, q, n, m).dims().values())
        e2_total = sum(e2_table(rs, W, q, builtin_profile(space, rs, W, m), n).dims().values())
        assert k_total == e2_total


@pytest.mark.parametrize("name", ROSTER)
def test_point_table_is_verlinde(name, group):
    rs, W = group(name)
    for n in range(rs.dual_coxeter, rs.dual_coxeter + 3):
        dims = table_point(rs, W, build_quotient(rs, n), n).dims()
        assert dims[rs.rank % 2] == verlinde_dimension(rs, n - rs.dual_coxeter)
        assert dims[(rs.rank + 1) % 2] == 0


def test_characters(group):
    rs, W = group("C3")
    assert WCharacter.sign_pow(W, 4) == WCharacter.trivial(W)
    assert WCharacter.sign_pow(W, 3).values == WCharacter.sign(W).values
    for chi in (WCharacter.trivial(W), WCharacter.sign(W), WCharacter.named(W, "sign^5")):
        assert chi.is_class_function(W)
    lengths = WCharacter(tuple(w.length for w in W), "length")
    assert not lengths.is_class_function(W, samples=200)


@pytest.mark.parametrize("bad", ["0:trivial,0:sign", "-1:sign", "0:weird", "nonsense", "0:trivial:x"])
def test_profile_parse_errors(bad, group):
    _, W = group("A2")
    with pytest.raises(InvalidInput):
        CohomologyProfile.parse(W, bad)


@given(st.sampled_from(["A1", "A2", "C2", "G2"]), st.integers(-8, 8).filter(bool),
       st.lists(st.sampled_from(["trivial", "sign"]), min_size=1, max_size=4))
def test_custom_profile_dims_nonnegative(name, n, chars):
    rs = root_system(name)
    W = generate(rs)
    q = build_quotient(rs, n)
    text = ",".join(f"{2 * i}:{c}" for i, c in enumerate(chars))
    t = e2_table(rs, W, q, CohomologyProfile.parse(W, text), n)
    assert [r.degree for r in t.rows] == [2 * i + rs.rank for i in range(len(chars))]
    assert all(r.dim >= 0 for r in t.rows)
    assert t.space == "custom" and t.n == n


def test_unknown_space(group):
    rs, W, q = setup(group, "A1", 3)
    with pytest.raises(InvalidInput):
        ktable("torus", rs, W, q, 3)
    with pytest.raises(InvalidInput):
        builtin_profile("torus", rs, W)
