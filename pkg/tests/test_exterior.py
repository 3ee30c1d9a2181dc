import random

import pytest

from cayley.exterior import (
    ExteriorVector,
    adjugate_exterior,
    adjugate_identity_holds,
    basis_wedge,
    det_exterior,
    induced_map,
    subsets,
    wedge,
)
from cayley.matrix import Matrix, adjugate_cofactor, det_cofactor, det_leibniz, identity, mat_scale, random_matrix
from cayley.rings import RingMismatch, Z, Zmod, make_ring

from conftest import RINGS, RING_IDS

ZZ = make_ring(Z)
A = Matrix(ZZ, [[1, 2], [3, 4]])
e1, e2 = [ZZ(1), ZZ(0)], [ZZ(0), ZZ(1)]


def test_wedge_basics():
    assert wedge([e1, e2]).coefficient((0, 1)) == ZZ(1)
    assert wedge([e2, e1]).coefficient((0, 1)) == ZZ(-1)
    assert wedge([e1, e1]).is_zero()


def test_empty_wedge_is_grade_zero_unit():
    w = wedge([], ring=ZZ, dim=3)
    assert w.grade == 0 and w.coefficient(()) == ZZ(1)
    with pytest.raises(ValueError):
        wedge([])


def test_wedge_rejects_bad_input():
    with pytest.raises(ValueError):
        wedge([e1, e2, e1])
    with pytest.raises(ValueError):
        wedge([[1, 2], [1, 2, 3]], ring=ZZ)


def test_basis_wedge_signs_follow_inversions():
    # (2, 0, 1) has two inversions, (1, 0, 2) has one
    assert basis_wedge(ZZ, 3, (2, 0, 1)).coefficient((0, 1, 2)) == ZZ(1)
    assert basis_wedge(ZZ, 3, (1, 0, 2)).coefficient((0, 1, 2)) == ZZ(-1)
    assert basis_wedge(ZZ, 3, (1, 1)).is_zero()


def test_top_and_bottom_grades_are_one_dimensional():
    assert subsets(4, 0) == [()]
    assert subsets(4, 4) == [(0, 1, 2, 3)]
    assert len(subsets(4, 2)) == 6


def test_exterior_vector_validates_keys():
    with pytest.raises(ValueError):
        ExteriorVector(ZZ, 3, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        ExteriorVector(ZZ, 3, 2, {(0, 3): 1})


def test_induced_map_on_top_grade_is_det():
    v = basis_wedge(ZZ, 2, (0, 1))
    image = induced_map(A, 2, v)
    assert image.coefficient((0, 1)) == ZZ(-2) == det_leibniz(A)


def test_induced_map_functorial():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 4)
        k = rng.randint(0, n)
        a, b = random_matrix(ZZ, n, rng), random_matrix(ZZ, n, rng)
        v = ExteriorVector(ZZ, n, k, {s: rng.randint(-3, 3) for s in subsets(n, k)})
        assert induced_map(identity(ZZ, n), k, v) == v
        assert induced_map(a @ b, k, v) == induced_map(a, k, induced_map(b, k, v))


def test_induced_map_mismatch():
    with pytest.raises(RingMismatch):
        induced_map(identity(Zmod(6), 2), 2, basis_wedge(ZZ, 2, (0, 1)))
    with pytest.raises(ValueError):
        induced_map(A, 1, basis_wedge(ZZ, 2, (0, 1)))


def test_det_exterior_examples():
    assert det_exterior(identity(Z, 2)) == ZZ(1)
    assert det_exterior(A) == ZZ(-2)
    assert det_exterior(Matrix(ZZ, [[0, 0], [0, 5]])) == ZZ(0)


def test_adjugate_exterior_examples():
    assert adjugate_exterior(Matrix(ZZ, [[9]])) == Matrix(ZZ, [[1]])
    assert adjugate_exterior(A) == Matrix(ZZ, [[4, -2], [-3, 1]])


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
def test_definitions_agree_with_fast_paths(desc):
    R = make_ring(desc)
    rng = random.Random(desc.token + "ext")
    for _ in range(150):
        a = random_matrix(R, rng.randint(1, 5), rng)
        d = det_exterior(a)
        assert d == det_cofactor(a)
        adj = adjugate_exterior(a)
        assert adj == adjugate_cofactor(a)
        assert adj @ a == mat_scale(d, identity(R, a.dim))


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
def test_defining_identity_with_random_vectors(desc):
    R = make_ring(desc)
    rng = random.Random(desc.token + "ident")
    for _ in range(100):
        n = rng.randint(2, 4)
        a = random_matrix(R, n, rng)
        xs = [tuple(R.random(rng) for _ in range(n)) for _ in range(n - 1)]
        y = tuple(R.random(rng) for _ in range(n))
        assert adjugate_identity_holds(a, xs, y)


def test_wrong_adjugate_fails_identity():
    # a e1 ^ e1 = -3 = e1 ^ adj(e1), while e1 ^ I e1 = 0
    xs = [(1, 0)]
    y = (1, 0)
    assert adjugate_identity_holds(A, xs, y)
    assert not adjugate_identity_holds(A, xs, y, adj=identity(ZZ, 2))


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
def test_wedge_multilinear(desc):
    R = make_ring(desc)
    rng = random.Random(desc.token + "lin")
    for _ in range(100):
        n = rng.randint(1, 4)
        k = rng.randint(1, n)
        vecs = [[R(R.random(rng)) for _ in range(n)] for _ in range(k)]
        u = [R(R.random(rng)) for _ in range(n)]
        al, be = R(R.random(rng)), R(R.random(rng))
        pos = rng.randrange(k)
        mixed = [al * x + be * y for x, y in zip(u, vecs[pos])]
        lhs = wedge(vecs[:pos] + [mixed] + vecs[pos + 1:])
        rhs = wedge(vecs[:pos] + [u] + vecs[pos + 1:]).scale(al.payload) + wedge(vecs).scale(be.payload)
        assert lhs == rhs


def test_wedge_alternating_on_repeats():
    rng = random.Random(2)
    for _ in range(50):
        v = [ZZ(rng.randint(-3, 3)) for _ in range(3)]
        w = [ZZ(rng.randint(-3, 3)) for _ in range(3)]
        assert wedge([v, w, v]).is_zero()
        assert wedge([v, w]) == wedge([w, v]).scale(-1)
