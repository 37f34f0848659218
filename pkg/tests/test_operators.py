import itertools

import pytest
from hypothesis import given, settings, strategies as st

from triplecheck import catalog
from triplecheck.algebra import AlgebraError
from triplecheck.brackets import yamaguti_bracket
from triplecheck.linalg import LinearlyDependentFamily, Matrix, Vector, express_in_family
from triplecheck.operators import (
    multiplication_triple,
    pair_operator,
    yamagutian,
    yamagutian_hat,
)

import oracles


def _oracle_matrix(rows):
    return Matrix(rows)


def test_left_unit_action(model, octonions):
    assert model.L[0] @ octonions.e(0) == octonions.e(1)


def test_families_match_oracle(model):
    for i in range(1, 8):
        v = oracles.unit(i)
        L, R = oracles.left_matrix(v), oracles.right_matrix(v)
        assert model.L[i - 1] == _oracle_matrix(L)
        assert model.R[i - 1] == _oracle_matrix(R)
        assert model.M[i - 1] == -(_oracle_matrix(L) + _oracle_matrix(R))


def test_left_square_is_minus_identity(model):
    assert model.L[0] @ model.L[0] == -Matrix.identity(8)


def test_middle_translation(model, octonions):
    e = octonions.e
    assert (model.M[0] @ e(2)).is_zero()
    assert model.M[0] @ e(0) == -2 * e(1)


def test_non_unital_rejected():
    with pytest.raises(AlgebraError):
        multiplication_triple(catalog.non_malcev())


def test_zero_triple(zero_model, gamma):
    assert yamagutian(zero_model, gamma.e(0), gamma.e(1)).is_zero()
    with pytest.raises(LinearlyDependentFamily):
        express_in_family(Matrix.zero(8), zero_model.L)


def test_yamagutian_examples(model, gamma, octonions):
    e, g = octonions.e, gamma.e
    x = gamma.vector([1, 2, 0, -1, 0, 0, "1/3"])
    assert yamagutian(model, x, x).is_zero()
    yh = yamagutian_hat(model, g("e1"), g("e2"))
    assert yh @ e(4) == -4 * e(7)
    assert (yh @ e(0)).is_zero()
    assert yamagutian(model, g("e1"), g("e2")) * 6 == yh


def test_yamagutian_pieces_match_oracle(octonions):
    v1, v2 = oracles.unit(1), oracles.unit(2)
    e4 = oracles.unit(4)
    lc = oracles.mcomm(oracles.left_matrix(v1), oracles.left_matrix(v2))
    rc = oracles.mcomm(oracles.right_matrix(v1), oracles.right_matrix(v2))
    assert oracles.mapply(lc, e4) == oracles.vscale(-2, oracles.unit(7))
    assert oracles.mapply(rc, e4) == oracles.vscale(-2, oracles.unit(7))


def test_pair_operator(model, gamma, octonions):
    g = gamma.e
    assert pair_operator(model, g("e3"), g("e3")).is_zero()
    assert pair_operator(model, g("e1"), g("e2")) @ octonions.e(0) == 2 * octonions.e(3)
    x, y = gamma.vector([1, 0, 2, 0, 0, -1, 0]), gamma.vector([0, "1/2", 0, 3, 0, 0, 1])
    assert (pair_operator(model, x, y) + pair_operator(model, y, x)).is_zero()


def test_yamagutian_is_derivation(model, gamma, octonions):
    e = octonions.e
    for i, j in itertools.product(range(7), repeat=2):
        yh = yamagutian_hat(model, gamma.e(i), gamma.e(j))
        for u, v in itertools.product(range(8), repeat=2):
            lhs = yh @ octonions.multiply(e(u), e(v))
            rhs = octonions.multiply(yh @ e(u), e(v)) + octonions.multiply(e(u), yh @ e(v))
            assert lhs == rhs
        assert (yh @ e(0)).is_zero()


def test_tangent_consistency(model, gamma):
    for i, j, k in itertools.product(range(7), repeat=3):
        x, y, z = gamma.e(i), gamma.e(j), gamma.e(k)
        assert yamagutian_hat(model, x, y) @ model.embed(z) == model.embed(yamaguti_bracket(gamma, x, y, z))


def test_left_family_independent(model):
    assert express_in_family(model.L[3], model.L) == Vector.basis(7, 3)


coords = st.lists(st.fractions(-3, 3, max_denominator=5), min_size=7, max_size=7)


@given(coords, coords, st.fractions(-5, 5, max_denominator=7), st.fractions(-5, 5, max_denominator=7))
@settings(max_examples=30, deadline=None)
def test_linearity(a, b, s, t):
    model = multiplication_triple(catalog.octonions())
    x, y = Vector(a), Vector(b)
    for fam in ("L", "R", "M"):
        assert model.op(fam, s * x + t * y) == s * model.op(fam, x) + t * model.op(fam, y)
