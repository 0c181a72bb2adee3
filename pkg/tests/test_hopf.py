import pytest

from mvpoly.hopf import (
    HopfRow,
    TensorTerm,
    apply_antipode,
    check_antipode_involution,
    check_coproduct_grading,
    check_counit_terms,
    check_geometric_conditions,
    check_positivity,
    format_word,
    parse_word,
    placed_factors,
    sp4_hopf_table,
    verify_hopf,
)


@pytest.fixture(scope="module")
def h():
    return sp4_hopf_table()


def _replace_term(h, name, index, term):
    row = h.rows[name]
    terms = list(row.coproduct)
    terms[index] = term
    return h.with_row(name, HopfRow(row.antipode_sign, row.antipode, tuple(terms)))


def test_words():
    assert parse_word("a2^2") == (("a2", 2),)
    assert parse_word("1") == ()
    assert parse_word("b1 a1 b1") == (("a1", 1), ("b1", 2))
    assert format_word(parse_word("a1 a2^2")) == "a1 a2^2"
    assert format_word(()) == "1"


def test_table_shape(h):
    assert h.names() == ["1", "a1", "a2", "b1", "b2", "c1", "c2", "c3", "d1"]
    assert sum(len(r.coproduct) for r in h.rows.values()) == 28


def test_shipped_table_passes(tables, h):
    rep = verify_hopf(tables["C2"], h)
    assert rep.ok, rep.summary()
    assert rep.terms == 28
    assert set(rep.checks) == {"grading", "counit_terms", "positivity", "geometric", "antipode_involution"}


def test_reflect_convention_fails(tables, h):
    bad = check_geometric_conditions(tables["C2"], h, "reflect")
    assert len(bad) == 8
    assert all("not contained" in m for m in bad)


def test_unknown_convention(tables, h):
    with pytest.raises(ValueError):
        check_geometric_conditions(tables["C2"], h, "rotate")


def test_grading_mutation_reported(tables, h):
    mutated = _replace_term(h, "c1", 1, TensorTerm(2, parse_word("b1"), parse_word("a1")))
    fails = check_coproduct_grading(tables["C2"], mutated)
    assert len(fails) == 1 and "Delta(c1)" in fails[0]


def test_geometry_mutation_reported(tables, h):
    mutated = _replace_term(h, "c1", 1, TensorTerm(2, parse_word("b2"), parse_word("a2")))
    assert not check_coproduct_grading(tables["C2"], mutated)
    fails = check_geometric_conditions(tables["C2"], mutated)
    assert any("b2 is not contained in c1" in m for m in fails)


def test_positivity_and_counit(h):
    mutated = _replace_term(h, "d1", 2, TensorTerm(0, parse_word("b1"), parse_word("b2")))
    assert len(check_positivity(mutated)) == 1
    mutated = _replace_term(h, "a1", 0, TensorTerm(2, parse_word("a1"), ()))
    assert check_counit_terms(mutated) == ["Delta(a1) lacks a1 (x) 1 with coefficient 1"]
    assert check_counit_terms(h) == []


def test_antipode(h):
    assert apply_antipode(h, 1, parse_word("c1")) == (-1, parse_word("c2"))
    assert apply_antipode(h, 1, parse_word("a1^2 b1")) == (1, parse_word("a1^2 b2"))
    assert check_antipode_involution(h) == []
    row = h.rows["b1"]
    broken = h.with_row("b1", HopfRow(row.antipode_sign, parse_word("b1"), row.coproduct))
    assert check_antipode_involution(broken) == ["S(S(b2)) = b1"]


def test_meeting_point(tables, h):
    t = tables["C2"]
    term = h.rows["d1"].coproduct[2]
    pi, pj = placed_factors(t, "d1", term, "translate")
    from mvpoly import geometry as geo
    assert geo.intersection(pi, pj) == geo.point_polytope((-1, -1))


def test_name_mismatch_raises(tables, h):
    with pytest.raises(KeyError, match="c1"):
        check_coproduct_grading(tables["A2"], h)
