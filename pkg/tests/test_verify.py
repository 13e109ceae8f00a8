import csv
import io
import itertools
import json
import math

import pytest

from segrecodes.gf import make_field
from segrecodes.matcodes import kronecker, rowspace_equal
from segrecodes.projgeom import canonicalize, custom_set, projective_space, projective_torus, segre_embed
from segrecodes.rmtype import evaluation_code
from segrecodes.verify import (
    CSV_COLUMNS,
    SegreConfig,
    build_set,
    load_configs,
    product_exponents,
    reports_to_json,
    standard_suite,
    sweep,
    verify_hilbert_product,
    verify_parameterized_closure,
    verify_segre,
)

import oracles

F2, F3, F4 = (make_field(q) for q in (2, 3, 4))


def statuses(rep):
    return {c.clause: c.status for c in rep.clauses}


def test_segre_p1_p1():
    rep = verify_segre(SegreConfig(2, "space:2", "space:2", 1))
    m = rep.measured
    assert (m["n"], m["k"], m["delta"], m["delta2_product"], m["reg"]) == (9, 4, 4, 6, 2)
    assert set(statuses(rep).values()) == {"pass"}
    assert rep.status == "pass"
    # independent oracle on the product code
    C = evaluation_code(segre_embed(projective_space(2, F2), projective_space(2, F2)), 1)
    rows = C.basis.tolist()
    assert oracles.min_distance(F2, rows) == 4
    assert oracles.ghw2(F2, rows) == 6


def test_segre_torus_q3():
    rep = verify_segre(SegreConfig(3, "torus:3", "torus:3", 1))
    m = rep.measured
    assert (m["n"], m["k"], m["delta"]) == (16, 9, 4)
    assert rep.status == "pass"
    for clause in "abcdf":
        assert statuses(rep)[clause] == "pass"


def test_torus_q3_distance_oracle():
    X = projective_torus(3, F3)
    C = evaluation_code(segre_embed(X, X), 1)
    assert oracles.min_distance(F3, C.basis.tolist()) == 4


def test_single_point_factor():
    rep = verify_segre(SegreConfig(2, "custom:1,1", "custom:1,1", 1))
    m = rep.measured
    assert (m["n"], m["k"], m["delta"]) == (1, 1, 1)
    for clause in "abcd":
        assert statuses(rep)[clause] == "pass"
    assert statuses(rep)["e"] == "skipped"


def test_single_point_reduces_to_factor():
    X1 = projective_space(3, F3)
    pt = custom_set(F3, 2, [(1, 2)])
    for d in (1, 2, 3):
        C1 = evaluation_code(X1, d)
        C = evaluation_code(segre_embed(X1, pt), d)
        assert C.n == C1.n and C.k == C1.k
        one = evaluation_code(pt, d).basis
        assert one.tolist() == [[1]]
        assert rowspace_equal(C.generators, kronecker(C1.basis, one))
    rep = verify_segre(SegreConfig(3, "space:3", "custom:1,2", 2))
    assert rep.status == "pass"


def test_degree_zero_skips_everything():
    rep = verify_segre(SegreConfig(2, "space:2", "space:2", 0))
    assert set(statuses(rep).values()) == {"skipped"}
    assert all("d >= 1" in c.note for c in rep.clauses)
    assert rep.measured["k"] == 1


def test_every_clause_records_prediction():
    rep = verify_segre(SegreConfig(3, "space:2", "torus:3", 2))
    for c in rep.clauses:
        if c.status != "skipped":
            assert c.predicted is not None and c.measured is not None


def test_budget_skips_distance_clauses():
    rep = verify_segre(SegreConfig(3, "space:3", "space:3", 2, budget_dist=100, budget_subspaces=100))
    st = statuses(rep)
    assert st["a"] == st["b"] == st["c"] == "pass"
    assert st["d"] == "skipped" and st["e"] == "skipped"
    assert "budget" in rep.clause("d").note
    assert rep.status == "pass"


def test_sweep_behaviour():
    assert sweep([]) == []
    reps = sweep([SegreConfig(2, "space:2", "space:2", 1), SegreConfig(3, "torus:3", "torus:3", 1)])
    assert [r.status for r in reps] == ["pass", "pass"]
    assert [r.config.q for r in reps] == [2, 3]


def test_sweep_embeds_errors():
    reps = sweep([SegreConfig(6, "space:2", "space:2", 1), SegreConfig(2, "space:2", "space:2", 1)])
    assert reps[0].status == "error" and "NotPrimePower" in reps[0].error
    assert reps[1].status == "pass"


def test_reports_reproducible():
    cfgs = [SegreConfig(3, "random:3:4", "param:1,1,0;0,1,1;1,0,1", d, seed=5) for d in (1, 2)]
    assert reports_to_json(sweep(cfgs)) == reports_to_json(sweep(cfgs))


def test_json_and_csv_shapes():
    rep = verify_segre(SegreConfig(2, "space:2", "space:2", 1))
    data = json.loads(reports_to_json([rep]))[0]
    assert set(data) == {"config", "measured", "clauses", "status"}
    assert [c["clause"] for c in data["clauses"]] == list("abcdef")
    buf = io.StringIO()
    csv.writer(buf).writerows([CSV_COLUMNS, rep.csv_row()])
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert rows[0]["n"] == "9" and rows[0]["delta2_product"] == "6" and rows[0]["status"] == "pass"


def test_config_roundtrip_and_key():
    c = SegreConfig(4, "space:2", "torus:3", 2, seed=3)
    again = SegreConfig.from_dict(c.to_dict())
    assert again.key() == c.key()
    assert SegreConfig(4, "space:2", "torus:3", 3).key() != c.key()
    with pytest.raises(ValueError):
        SegreConfig.from_dict({"q": 2, "x1": "space:2"})
    with pytest.raises(ValueError):
        SegreConfig.from_dict({"q": 2, "x1": "space:2", "x2": "space:2", "d": 1, "colour": 1})


def test_load_configs_errors(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("")
    with pytest.raises(ValueError, match="empty"):
        load_configs(p)
    p.write_text("[{\"q\": 2,\n")
    with pytest.raises(ValueError, match="line"):
        load_configs(p)
    p.write_text(json.dumps([{"q": 2, "x1": "space:2", "x2": "space:2", "d": 1}, {"q": 2}]))
    with pytest.raises(ValueError, match="entry 1"):
        load_configs(p)


def test_build_set_kinds(tmp_path):
    assert len(build_set("space:3", F2)) == 7
    assert len(build_set("torus:3", F3)) == 4
    assert len(build_set("random:3:4", F3, seed=1)) == 4
    assert build_set("random:3:4:9", F3, seed=1) == build_set("random:3:4:9", F3, seed=2)
    X = build_set("custom:1,0,1;0,1,1", F2)
    path = tmp_path / "x.txt"
    path.write_text("q=2 s=3\n1,0,1\n0,1,1\n")
    assert build_set(f"file:{path}", F2).coord_tuples == X.coord_tuples
    with pytest.raises(ValueError):
        build_set(f"file:{path}", F3)
    with pytest.raises(ValueError):
        build_set("cube:3", F2)


def test_standard_suite_shape():
    cfgs = standard_suite()
    assert len({(c.q, c.x1, c.x2) for c in cfgs}) == 3 * 25
    assert all(c.d >= 1 for c in cfgs)


# -- Hilbert product --------------------------------------------------------

def test_hilbert_product_p1_f2():
    X = projective_space(2, F2)
    rep = verify_hilbert_product(X, X, 3)
    assert [r["h"] for r in rep.rows] == [1, 4, 9, 9]
    assert [r["h1"] * r["h2"] for r in rep.rows] == [1, 4, 9, 9]
    assert rep.ok


def test_hilbert_product_degree_zero():
    rep = verify_hilbert_product(projective_torus(3, F4), projective_space(2, F4), 0)
    assert rep.rows == [{"d": 0, "h1": 1, "h2": 1, "h": 1, "ok": True}]


def test_hilbert_product_mixed():
    rep = verify_hilbert_product(projective_space(2, F3), projective_torus(2, F3), 1)
    assert rep.rows[1]["h"] == 4
    X = segre_embed(projective_space(2, F3), projective_torus(2, F3))
    C = evaluation_code(X, 1)
    assert C.generators.shape == (4, 8)
    assert oracles.rank_by_counting(F3, C.generators.tolist()) == 4


# -- parameterized closure --------------------------------------------------

def test_closure_two_tori():
    E = [[1, 0], [0, 1]]
    rep = verify_parameterized_closure(E, E, F3)
    assert rep.equal and rep.segre_size == rep.param_size == 4
    assert rep.exponents == [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]


def test_closure_single_monomials():
    rep = verify_parameterized_closure([[2, 1]], [[1]], F4)
    assert rep.equal and rep.segre_size == rep.param_size == 1


def test_closure_mixed():
    rep = verify_parameterized_closure([[1, 1, 0], [0, 1, 1], [1, 0, 1]], [[1, 0], [0, 1]], F3)
    assert rep.equal


def test_product_exponents_layout():
    assert product_exponents([[1, 2]], [[3], [4]]) == [[1, 2, 3], [1, 2, 4]]


def test_closure_brute_force():
    # both sides enumerated from scratch over the algebraic tori
    E1, E2 = [[1, 1, 0], [0, 1, 1], [1, 0, 1]], [[1, 0], [0, 1]]
    units = [1, 2]
    segre, param = set(), set()
    for z in itertools.product(units, repeat=3):
        v = [z[0] ** a * z[1] ** b * z[2] ** c % 3 for a, b, c in E1]
        for w in itertools.product(units, repeat=2):
            u = [w[0] ** a * w[1] ** b % 3 for a, b in E2]
            segre.add(canonicalize(F3, [x * y % 3 for x in v for y in u]).coords)
            zw = z + w
            mono = [math.prod(pow(t, e, 3) for t, e in zip(zw, ex)) % 3
                    for ex in product_exponents(E1, E2)]
            param.add(canonicalize(F3, mono).coords)
    assert segre == param
    rep = verify_parameterized_closure(E1, E2, F3)
    assert rep.equal and rep.segre_size == len(segre)
