import itertools

import pytest

from segrecodes.errors import DegenerateField, DuplicatePoint, FieldMismatch, ZeroVector
from segrecodes.gf import make_field
from segrecodes.projgeom import (
    canonicalize,
    custom_set,
    format_pointset,
    parameterized_set,
    parse_pointset,
    projective_space,
    projective_torus,
    random_subset,
    read_pointset,
    segre_embed,
    segre_point,
    write_pointset,
)

from oracles import brute_projective_points

F2, F3, F4, F5 = (make_field(q) for q in (2, 3, 4, 5))


def coords(X):
    return [P.coords for P in X]


@pytest.mark.parametrize("field, v, expected", [
    (F3, (0, 2, 1), (0, 1, 2)),
    (F2, (1, 0, 1), (1, 0, 1)),
    (F5, (3, 3, 3), (1, 1, 1)),
])
def test_canonicalize_examples(field, v, expected):
    assert canonicalize(field, v).coords == expected


def test_canonicalize_zero():
    with pytest.raises(ZeroVector):
        canonicalize(F3, (0, 0))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_canonicalize_scalar_invariant(q):
    f = make_field(q)
    for v in itertools.product(range(q), repeat=3):
        if not any(v):
            continue
        base = canonicalize(f, v)
        assert canonicalize(f, base.coords) == base
        for lam in range(1, q):
            assert canonicalize(f, [f.mul(lam, x) for x in v]) == base


def test_projective_space_examples():
    assert coords(projective_space(2, F2)) == [(0, 1), (1, 0), (1, 1)]
    assert len(projective_space(3, F2)) == 7
    assert coords(projective_space(2, F3)) == [(0, 1), (1, 0), (1, 1), (1, 2)]


@pytest.mark.parametrize("q, s", [(2, 1), (2, 4), (3, 3), (4, 3), (5, 2), (8, 2), (9, 2)])
def test_projective_space_matches_scan(q, s):
    f = make_field(q)
    X = projective_space(s, f)
    assert len(X) == (q**s - 1) // (q - 1)
    assert coords(X) == brute_projective_points(f, s)  # also fixes lexicographic order


def test_torus_examples():
    assert coords(projective_torus(2, F3)) == [(1, 1), (1, 2)]
    assert coords(projective_torus(3, F3)) == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]
    assert coords(projective_torus(2, F2)) == [(1, 1)]


@pytest.mark.parametrize("q, s", [(3, 4), (4, 3), (5, 3), (7, 2)])
def test_torus_size(q, s):
    X = projective_torus(s, make_field(q))
    assert len(X) == (q - 1) ** (s - 1)
    assert coords(X) == sorted(coords(X))


def test_torus_degenerate_flag():
    with pytest.raises(DegenerateField):
        projective_torus(3, F2, require_nondegenerate=True)
    assert len(projective_torus(3, F3, require_nondegenerate=True)) == 4


def test_parameterized_examples():
    assert coords(parameterized_set([(1, 0), (0, 1)], F3)) == [(1, 1), (1, 2)]
    assert coords(parameterized_set([(1,), (1,)], F5)) == [(1, 1)]


def test_parameterized_brute_image():
    exps = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    X = parameterized_set(exps, F3)
    image = set()
    for z in itertools.product((1, 2), repeat=3):
        v = [(z[0] ** a * z[1] ** b * z[2] ** c) % 3 for a, b, c in exps]
        image.add(canonicalize(F3, v).coords)
    assert set(coords(X)) == image
    torus = set(coords(projective_torus(3, F3)))
    assert set(coords(X)) <= torus


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_parameterized_inside_torus(q):
    f = make_field(q)
    X = parameterized_set([(2, 0, 1), (0, 1, 1), (1, 1, 0), (0, 0, 3)], f)
    assert all(all(x for x in P.coords) for P in X)
    assert len(set(coords(X))) == len(X)


def test_segre_point_examples():
    P, Q = canonicalize(F2, (1, 1)), canonicalize(F2, (0, 1))
    assert segre_point(P, Q).coords == (0, 1, 0, 1)
    P, Q = canonicalize(F3, (1, 2)), canonicalize(F3, (1, 1))
    assert segre_point(P, Q).coords == (1, 1, 2, 2)


def test_segre_p1_p1():
    X1 = projective_space(2, F2)
    X = segre_embed(X1, X1)
    assert len(X) == 9 and len(set(coords(X))) == 9
    assert X.ambient_dim == 4
    # row-major: point i*|X2|+j is psi(Q_i, R_j)
    for i, Q in enumerate(X1):
        for j, R in enumerate(X1):
            assert X[i * 3 + j] == segre_point(Q, R)


def test_segre_products_are_canonical_p2_f3():
    X1 = projective_space(3, F3)
    X = segre_embed(X1, X1)
    assert len(X) == 169 and len(set(coords(X))) == 169
    for P in X:
        assert canonicalize(F3, P.coords) == P


def test_segre_field_mismatch():
    with pytest.raises(FieldMismatch):
        segre_embed(projective_space(2, F2), projective_space(2, F3))


def test_custom_set_examples():
    assert len(custom_set(F2, 3, [(1, 0, 0), (0, 1, 0)])) == 2
    with pytest.raises(DuplicatePoint) as info:
        custom_set(F3, 2, [(1, 1), (2, 2)])
    assert (info.value.first, info.value.second) == (0, 1)
    with pytest.raises(ZeroVector):
        custom_set(F2, 2, [(0, 0)])


def test_custom_keeps_order():
    X = custom_set(F5, 2, [(2, 4), (0, 3), (1, 0)])
    assert coords(X) == [(1, 2), (0, 1), (1, 0)]


def test_random_subset_seeded():
    P2 = projective_space(3, F3)
    a, b = random_subset(P2, 4, seed=7), random_subset(P2, 4, seed=7)
    assert a == b and len(a) == 4
    assert set(coords(a)) <= set(coords(P2))


def test_pointset_file_roundtrip(tmp_path):
    X = projective_torus(3, F4)
    path = tmp_path / "x.txt"
    write_pointset(X, path)
    Y = read_pointset(path)
    assert coords(Y) == coords(X)
    assert format_pointset(Y) == format_pointset(X)


def test_pointset_file_canonicalizes():
    Y = parse_pointset("q=5 s=2\n2,4\n0,3\n")
    assert coords(Y) == [(1, 2), (0, 1)]
    assert format_pointset(Y) == "q=5 s=2\n1,2\n0,1\n"
    with pytest.raises(ZeroVector):
        parse_pointset("q=5 s=2\n0,0\n")
