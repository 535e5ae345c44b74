import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import int_matmul, int_transpose
from untwist.errors import (
    DimensionMismatch,
    NonUnimodularIntersection,
    NotSymplectic,
    NotUnimodular,
    OddDimension,
)
from untwist.generators import random_seifert, random_unimodular
from untwist.seifert import (
    BasisChange,
    SymplecticSeifertMatrix,
    antisym,
    basis_change,
    connected_sum,
    det,
    parity_normalize,
    standard_form,
    symplectic_reduce,
    validate_seifert,
)
from untwist.alexander import alexander_polynomial

GK1 = [[0, 1], [2, 0]]


def test_validate_gk1_example():
    v = validate_seifert(GK1)
    assert v.genus == 1
    assert v[1, 0] == 2


def test_validate_empty_is_unknot():
    v = validate_seifert([])
    assert v.genus == 0 and v.dim == 0


def test_symmetric_matrix_rejected():
    with pytest.raises(NonUnimodularIntersection):
        validate_seifert([[0, 1], [1, 0]])


def test_odd_dimension_rejected():
    with pytest.raises(OddDimension):
        validate_seifert([[1]])


def test_non_square_rejected():
    with pytest.raises(DimensionMismatch):
        validate_seifert([[1, 2]])


def test_non_integer_rejected():
    with pytest.raises(TypeError):
        validate_seifert([[0.0, 1], [2, 0]])


def test_det_matches_cofactor():
    m = ((2, -1, 0, 3), (1, 4, -2, 0), (0, 5, 1, -1), (3, 0, 2, 2))

    def cof(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] * cof([r[:j] + r[j + 1:] for r in a[1:]]) for j in range(len(a)))

    assert det(m) == cof([list(r) for r in m])


def test_connected_sum_identity():
    v = validate_seifert(GK1)
    assert connected_sum(v, validate_seifert([])) == v
    assert connected_sum(validate_seifert([]), v) == v


def test_connected_sum_gk1_pair():
    v = validate_seifert(GK1)
    s = connected_sum(v, v)
    assert s.genus == 2
    assert [list(r) for r in s.entries] == [[0, 1, 0, 0], [2, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 0]]


def test_connected_sum_multiplies_alexander(rng):
    for _ in range(20):
        a, b = random_seifert(rng, 1), random_seifert(rng, 1)
        assert alexander_polynomial(connected_sum(a, b)) == alexander_polynomial(a) * alexander_polynomial(b)


def test_connected_sum_associative(rng):
    for _ in range(20):
        a, b, c = (random_seifert(rng, rng.randint(0, 2)) for _ in range(3))
        assert connected_sum(connected_sum(a, b), c) == connected_sum(a, connected_sum(b, c))


def test_basis_change_identity():
    v = validate_seifert(GK1)
    assert basis_change(v, BasisChange.identity(2)) == v


def test_basis_change_hand_example():
    v = validate_seifert([[0, 2], [1, 0]])
    out = basis_change(v, BasisChange(((1, 0), (1, 1))))
    assert out.entries == ((3, 2), (1, 0))


def test_basis_change_errors():
    v = validate_seifert(GK1)
    with pytest.raises(NotUnimodular):
        BasisChange(((2, 0), (0, 1)))
    with pytest.raises(DimensionMismatch):
        basis_change(v, BasisChange.identity(4))


def test_basis_change_keeps_validity(rng):
    for _ in range(100):
        v = random_seifert(rng, rng.randint(1, 3))
        u = random_unimodular(rng, v.dim)
        w = basis_change(v, u)
        assert det(antisym(w.entries)) == 1
        # independent product
        m = int_matmul(int_matmul(int_transpose(u.matrix), v.to_lists()), [list(r) for r in u.matrix])
        assert w.to_lists() == m


def test_symplectic_fixed_point():
    v = validate_seifert([[0, 2], [1, 0]])
    vs, u = symplectic_reduce(v)
    assert u.is_identity()
    assert vs.entries == v.entries


def test_symplectic_reduce_gk1_example():
    v = validate_seifert(GK1)
    vs, u = symplectic_reduce(v)
    assert isinstance(vs, SymplecticSeifertMatrix)
    j = [list(r) for r in standard_form(1)]
    a = [list(r) for r in antisym(v.entries)]
    assert int_matmul(int_matmul(int_transpose(u.matrix), a), [list(r) for r in u.matrix]) == j
    assert antisym(vs.entries) == standard_form(1)


def test_symplectic_reduce_random(rng):
    for _ in range(100):
        v = random_seifert(rng, 2)
        vs, u = symplectic_reduce(v)
        assert antisym(vs.entries) == standard_form(2)
        assert basis_change(v, u).entries == vs.entries


def test_symplectic_type_checks_form():
    with pytest.raises(NotSymplectic):
        SymplecticSeifertMatrix(((0, 1), (2, 0)))


@pytest.mark.parametrize(
    "v, expected, u",
    [
        ([[1, 1], [0, 1]], ((1, 1), (0, 1)), ((1, 0), (0, 1))),
        ([[0, 2], [1, 0]], ((3, 2), (1, 0)), ((1, 0), (1, 1))),
        ([[2, 2], [1, 1]], ((1, -1), (-2, 2)), ((0, -1), (1, 0))),
    ],
)
def test_parity_normalize_cases(v, expected, u):
    out, change = parity_normalize(SymplecticSeifertMatrix(tuple(map(tuple, v))))
    assert out.entries == expected
    assert change.matrix == u
    assert antisym(out.entries) == standard_form(1)


def test_reduce_then_normalize_1000():
    rng = random.Random(7)
    for _ in range(1000):
        v = random_seifert(rng, rng.randint(0, 3))
        vs, u1 = symplectic_reduce(v)
        vn, u2 = parity_normalize(vs)
        u = u1.then(u2)
        assert abs(det(u.matrix)) == 1
        assert antisym(vn.entries) == standard_form(v.genus)
        assert all(vn.entries[2 * i][2 * i] % 2 == 1 for i in range(v.genus))
        assert basis_change(v, u).entries == vn.entries
        # idempotent
        again, u3 = parity_normalize(vn)
        assert u3.is_identity() and again == vn


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.integers(0, 2 ** 32))
def test_congruence_accepted(g, seed):
    r = random.Random(seed)
    v = random_seifert(r, g)
    u = random_unimodular(r, v.dim, steps=10)
    assert validate_seifert(basis_change(v, u).entries).genus == g
