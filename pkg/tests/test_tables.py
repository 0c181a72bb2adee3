import json

import pytest

from mvpoly import geometry as geo
from mvpoly.calibration import validate_table
from mvpoly.rootsys import load_root_system
from mvpoly.tables import (
    Generator,
    GeneratorTable,
    Monomial,
    TableError,
    builtin_table,
    dumps_table,
    load_table,
    save_table,
    table_from_dict,
    table_to_dict,
)


@pytest.mark.parametrize("group,n_gens,n_edges", [("A1", 1, 0), ("A2", 4, 1), ("C2", 8, 9), ("A3", 12, 15)])
def test_builtin_sizes(group, n_gens, n_edges):
    t = builtin_table(group)
    assert len(t.generators) == n_gens
    assert len(t.incompat_edges) == n_edges


def test_unknown_builtin():
    with pytest.raises(ValueError, match="supported groups"):
        builtin_table("B2")


def verts(t, name):
    return set(t.generator(name).polytope.vertices)


def test_a2_contents():
    t = builtin_table("A2")
    assert verts(t, "a1") == {(0, 0), (-1, 0)}
    assert verts(t, "b1") == {(0, 0), (-1, 0), (-1, -1)}
    assert verts(t, "b2") == {(0, 0), (0, -1), (-1, -1)}
    assert t.incompat_edges == (("a1", "a2"),)


def test_c2_contents():
    t = builtin_table("C2")
    degrees = {g.name: g.degree for g in t.generators}
    assert degrees == {"a1": (-1, 0), "a2": (0, -1), "b1": (-1, -1), "b2": (-1, -1),
                       "c1": (-1, -2), "c2": (-1, -2), "c3": (-1, -2), "d1": (-2, -2)}
    assert verts(t, "c1") == {(0, 0), (-1, 0), (-1, -2)}
    assert verts(t, "c2") == {(0, 0), (0, -2), (-1, -2)}
    assert verts(t, "c3") == {(0, 0), (0, -1), (-1, -1), (-1, -2)}
    assert verts(t, "d1") == {(0, 0), (-1, 0), (-1, -2), (-2, -2)}
    assert set(t.incompat_edges) == {
        ("a1", "a2"), ("a1", "c1"), ("a1", "c2"), ("a2", "b1"), ("a2", "b2"),
        ("b1", "b2"), ("b1", "c2"), ("b2", "c1"), ("c1", "c2"),
    }


def test_a3_contents():
    t = builtin_table("A3")
    shapes = {g.name: (g.polytope.dim_affine, len(g.polytope.vertices)) for g in t.generators}
    assert all(shapes[f"b{i}"] == (2, 3) for i in range(1, 5))
    assert shapes["c1"] == shapes["c2"] == (3, 5)
    assert shapes["c3"] == shapes["c4"] == (3, 4)
    assert shapes["d1"] == (3, 6) and len(t.generator("d1").polytope.facets) == 8
    assert t.generator("d1").degree == (-1, -2, -1)
    free = {n for n in t.names} - {n for e in t.incompat_edges for n in e}
    assert free == {"c3", "c4", "d1"}


def test_roundtrip(tmp_path, tables):
    for t in tables.values():
        path = tmp_path / f"{t.group}.json"
        save_table(t, path)
        back = load_table(path)
        assert back == t
        assert dumps_table(back) == path.read_text()
        assert [g.provenance for g in back.generators] == [g.provenance for g in t.generators]


def test_no_floats_in_files(tables):
    for t in tables.values():
        text = dumps_table(t)
        doc = json.loads(text)
        for g in doc["generators"]:
            assert all(isinstance(c, str) for row in g["vertices"] for c in row)


def test_dangling_edge_named(tables):
    doc = table_to_dict(tables["A2"])
    doc["incompat_edges"].append(["a1", "zz"])
    with pytest.raises(TableError, match="zz"):
        table_from_dict(doc)


def test_non_lattice_vertex_rejected(tables):
    doc = table_to_dict(tables["A2"])
    doc["generators"][2]["vertices"].append(["1/2", "1/2"])
    with pytest.raises(TableError, match="lattice"):
        table_from_dict(doc)


def test_parse_error_location(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "group": "A2",\n  "generators": [,]\n}\n')
    with pytest.raises(TableError, match="line 3"):
        load_table(path)


def test_missing_field(tables):
    doc = table_to_dict(tables["A2"])
    del doc["generators"][0]["degree"]
    with pytest.raises(TableError, match=r"generators\[0\].*degree"):
        table_from_dict(doc)


def test_data_dir_override(tmp_path, monkeypatch, tables):
    save_table(tables["A1"], tmp_path / "A1.json")
    monkeypatch.setenv("MVPOLY_DATA_DIR", str(tmp_path))
    assert builtin_table("A1", tmp_path) == tables["A1"]


def test_monomials(tables):
    t = tables["C2"]
    m = Monomial.parse(t, "a1 b1^2 d1")
    assert str(m) == "a1 b1^2 d1"
    assert m.as_dict() == {"a1": 1, "b1": 2, "d1": 1}
    assert t.is_admissible(m)
    assert not t.is_admissible(Monomial.parse(t, "a1 a2"))
    assert str(Monomial.parse(t, "1")) == "1"
    assert t.degree_of(m.exponents) == (-5, -4)
    with pytest.raises(KeyError):
        Monomial.parse(t, "q7")


def test_generator_invariants_enforced():
    seg = geo.convex_hull([(0, 0), (-1, -1)])
    bad = Generator("x", (-1, -1), geo.convex_hull([(0, 0), (-2, -1)]))
    with pytest.raises(TableError):
        GeneratorTable("A2", [bad], [])
    ok = Generator("x", (-1, -1), seg)
    GeneratorTable("A2", [ok], [])


def test_validate_shipped_a2(tables):
    rep = validate_table(tables["A2"], 8)
    assert rep.ok, rep.summary()


def test_validate_a1_counts(tables):
    rep = validate_table(tables["A1"], 8)
    assert rep.ok and rep.counts["kostant_count"] == 8


def test_mutation_parallelogram_detected(tables):
    t = tables["A2"]
    par = geo.convex_hull([(0, 0), (-1, 0), (0, -1), (-1, -1)])
    bad = t.with_changes(generators=[Generator("b1", (-1, -1), par)])
    rep = validate_table(bad, 8)
    assert not rep.ok
    assert rep.checks["freudenthal"]
    # a1 a2 is not admissible, so the parallelogram does not collide with anything
    assert not rep.checks["injectivity"]


def test_mutation_duplicate_detected(tables):
    t = tables["A2"]
    bad = t.with_changes(generators=[Generator("b1", (-1, -1), t.generator("b2").polytope)])
    rep = validate_table(bad, 6)
    assert rep.checks["injectivity"]
