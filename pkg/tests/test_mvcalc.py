import pytest
from hypothesis import given, strategies as st

from mvpoly import geometry as geo
from mvpoly.mvcalc import (
    InvariantViolation,
    admissible_monomials,
    character,
    dimension_identity,
    mv_polytopes,
    tensor_decompose,
    tensor_multiplicity,
    tensor_witnesses,
    bound_chain,
    weight_count,
    weight_multiplicity,
    weylgon,
)
from mvpoly.rootsys import freudenthal_character, klimyk_decompose, kostant_partition_count
from mvpoly.tables import Generator


def test_adjoint_anchor(tables, systems):
    t, rs = tables["A2"], systems["A2"]
    assert weight_multiplicity(t, rs, (1, 1), (0, 0)) == 2
    ch = character(t, rs, (1, 1))
    assert sum(ch.values()) == 8
    assert sorted(ch.values()) == [1] * 6 + [2]


def test_weight_count_reports_excluded(tables, systems):
    t, rs = tables["A2"], systems["A2"]
    inside, total, excluded = weight_count(t, rs, (1, 0), (-1, 1))
    assert (inside, total) == (1, 1) and excluded == []
    # (0,0) - (1,0) is not in the root lattice
    assert weight_count(t, rs, (1, 0), (0, 0)) == (0, 0, [])
    inside, total, excluded = weight_count(t, rs, (1, 0), (0, -1))
    assert (inside, total) == (1, 2)
    assert len(excluded) == 1


def test_non_weight_lattice_offset_is_zero(tables, systems):
    assert weight_multiplicity(tables["A2"], systems["A2"], (1, 0), (1, 0)) == 1
    assert weight_multiplicity(tables["A2"], systems["A2"], (1, 0), (0, 1)) == 0


def test_adjoint_squared(tables, systems):
    t, rs = tables["A2"], systems["A2"]
    assert tensor_multiplicity(t, rs, (1, 1), (1, 1), (1, 1)) == 2
    dec = tensor_decompose(t, rs, (1, 1), (1, 1))
    assert dec == {(0, 0): 1, (0, 3): 1, (1, 1): 2, (2, 2): 1, (3, 0): 1}
    assert dimension_identity(rs, (1, 1), (1, 1), dec)


def test_sharpness(tables, systems):
    assert bound_chain(tables["A2"], systems["A2"], (2, 2), (2, 2), (1, 1)) == (2, 2, 2)


def test_bound_chain_rejects_bad_delta(tables, systems):
    with pytest.raises(ValueError):
        bound_chain(tables["A2"], systems["A2"], (1, 0), (0, 0), (1, 1))
    with pytest.raises(ValueError):
        bound_chain(tables["A2"], systems["A2"], (1, 1), (1, 1), (-1, 0))


def test_hexagon(tables, systems):
    t, rs = tables["A2"], systems["A2"]
    P = t.polytope_of((0, 0, 1, 1))
    assert P == geo.translate(weylgon(rs, (1, 1)), (-1, -1))


def test_a1a2_union(tables):
    t = tables["A2"]
    sq = t.polytope_of((1, 1, 0, 0))
    b1, b2 = t.generator("b1").polytope, t.generator("b2").polytope
    assert geo.contains(sq, b1) and geo.contains(sq, b2)
    assert geo.volume(b1) + geo.volume(b2) == geo.volume(sq)
    assert geo.volume(geo.intersection(b1, b2)) == 0


def test_mv_polytopes_a2(tables, systems):
    mv = mv_polytopes(tables["A2"], (-2, -1))
    assert [str(m) for m, _ in mv.entries] == ["a1 b1", "a1 b2"]
    assert len(mv) == kostant_partition_count(systems["A2"], (2, 1))


def test_degree_validation(tables):
    with pytest.raises(ValueError):
        admissible_monomials(tables["A2"], (1, 0))
    with pytest.raises(ValueError):
        admissible_monomials(tables["A2"], (-1, 0, 0))
    with pytest.raises(ValueError):
        mv_polytopes(tables["A2"], ("-1/2", 0))


def test_dominance_required(tables, systems):
    with pytest.raises(ValueError, match="dominant"):
        weight_multiplicity(tables["A2"], systems["A2"], (-1, 0), (0, 0))
    with pytest.raises(ValueError, match="dominant"):
        tensor_decompose(tables["A2"], systems["A2"], (1, 0), (0, -1))


def test_root_system_defaults(tables):
    assert weight_multiplicity(tables["C2"], None, (0, 1), (0, 1)) == 1


def test_witness_names(tables, systems):
    w = tensor_witnesses(tables["C2"], systems["C2"], (1, 2), (2, 0), (1, 2))
    assert sorted(str(m) for m in w) == ["b2^2", "d1"]


def test_broken_table_raises(tables):
    t = tables["A2"]
    bad = t.with_changes(generators=[Generator("b1", (-1, -1), t.generator("b2").polytope)])
    with pytest.raises(InvariantViolation):
        mv_polytopes(bad, (-1, -1))


def test_monomials_sorted(tables):
    monos = admissible_monomials(tables["C2"], (-2, -2))
    assert [m.exponents for m in monos] == sorted((m.exponents for m in monos), reverse=True)


# ------------------------------------------------------------- properties

dominant2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
small2 = st.tuples(st.integers(0, 2), st.integers(0, 2))


@given(group=st.sampled_from(["A2", "C2"]), lam=dominant2)
def test_character_matches_freudenthal(tables, systems, group, lam):
    assert character(tables[group], systems[group], lam) == freudenthal_character(systems[group], lam)


@given(group=st.sampled_from(["A2", "C2"]), lam=small2, mu=small2)
def test_tensor_matches_klimyk(tables, systems, group, lam, mu):
    t, rs = tables[group], systems[group]
    dec = tensor_decompose(t, rs, lam, mu)
    assert dec == klimyk_decompose(rs, lam, mu)
    assert dec == tensor_decompose(t, rs, mu, lam)


@given(group=st.sampled_from(["A2", "C2"]), lam=dominant2, data=st.data())
def test_weight_mult_is_weyl_invariant_and_bounded(tables, systems, group, lam, data):
    t, rs = tables[group], systems[group]
    ch = character(t, rs, lam)
    nu = data.draw(st.sampled_from(sorted(ch)))
    assert weight_multiplicity(t, rs, lam, nu) == ch[nu]
    from mvpoly.rootsys import dominant_representative, fund_to_root
    assert ch[dominant_representative(rs, nu)] == ch[nu]
    delta = tuple(-c for c in fund_to_root(rs, tuple(b - a for a, b in zip(lam, nu))))
    assert ch[nu] <= kostant_partition_count(rs, delta)


@given(group=st.sampled_from(["A1", "A2", "C2"]), depth=st.integers(0, 5), data=st.data())
def test_polytope_invariants(tables, group, depth, data):
    t = tables[group]
    nu = tuple(-data.draw(st.integers(0, depth)) for _ in range(t.rank))
    for m, P in mv_polytopes(t, nu).entries:
        assert (0,) * t.rank in P.vertices and nu in P.vertices
        assert all(isinstance(c, int) for v in P.vertices for c in v)


def test_c2_six_polytopes(tables, systems):
    # long root alpha1: the six-polygon degree is -(2 a1 + 4 a2)
    assert len(mv_polytopes(tables["C2"], (-2, -4))) == 6
    assert kostant_partition_count(systems["C2"], (2, 4)) == 6
