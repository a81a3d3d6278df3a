import itertools

import numpy as np
import pytest

from naqm.algebra import BasisUnit, unit
from naqm.matrix_rep import A_UNITS, GENERATIONS, eigen_decomposition, homomorphism_check, rep

B = BasisUnit


def test_units():
    assert A_UNITS == (B.ONE, B.I3, B.I0, B.E3)


@pytest.mark.parametrize("u, diag", [
    (B.ONE, (1, 1, 1)),
    (B.I3, (-1j, 1j, 1j)),
    (B.E3, (1, -1, 1)),
    (B.I0, (-1j, -1j, 1j)),
])
def test_rep(u, diag):
    assert np.array_equal(rep(u), np.diag(diag))


@pytest.mark.parametrize("u", [B.I1, B.E1, B.I4])
def test_outside_a(u):
    with pytest.raises(ValueError):
        rep(u)


def test_homomorphism():
    r = homomorphism_check()
    assert r.passed and r.total_cases == 16


def test_linear_extension():
    # rep is linear, so products of general elements of A map to matrix products.
    x = 2 * unit(B.I3) - unit(B.E3) + 3j * unit(B.ONE)
    y = unit(B.I0) + 0.5 * unit(B.I3)

    def r(el):
        return sum(el[u] * rep(u) for u in A_UNITS)

    assert np.allclose(r(x * y), r(x) @ r(y))


def test_images_commute():
    for a, b in itertools.product(A_UNITS, repeat=2):
        assert np.array_equal(rep(a) @ rep(b), rep(b) @ rep(a))


def test_squares():
    assert np.array_equal(rep(B.I3) @ rep(B.I3), -np.eye(3))
    assert np.array_equal(rep(B.I0) @ rep(B.I0), -np.eye(3))
    assert np.array_equal(rep(B.E3) @ rep(B.E3), np.eye(3))


def test_eigen_table():
    table = tuple(tuple(lam for _, lam in eigen_decomposition(u)) for u in (B.I3, B.E3, B.I0))
    assert table == ((-1j, 1j, 1j), (1, -1, 1), (-1j, -1j, 1j))
    for (xi, _), g in zip(eigen_decomposition(B.I3), GENERATIONS):
        assert np.array_equal(xi, g)
