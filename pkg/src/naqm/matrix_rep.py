"""Diagonal 3x3 representation of the commutative subalgebra span{1, i3, e3, i0}.

All entries lie in {0, +-1, +-I}; products of such matrices are exact in
complex floating point, so every comparison here is exact.
"""

from __future__ import annotations

import numpy as np

from .algebra import BasisUnit, Subalgebra, basis_product, sorted_units, subalgebra_units
from .report import VerificationReport, _Collector

__all__ = ["rep", "homomorphism_check", "eigen_decomposition", "GENERATIONS", "A_UNITS"]

A_UNITS = tuple(sorted_units(subalgebra_units(Subalgebra.COMMUTATIVE_A)))

_DIAGONALS = {
    BasisUnit.ONE: (1, 1, 1),
    BasisUnit.I3: (-1j, 1j, 1j),
    BasisUnit.E3: (1, -1, 1),
    BasisUnit.I0: (-1j, -1j, 1j),
}

# Generation vectors xi_1, xi_2, xi_3.
GENERATIONS = tuple(np.eye(3, dtype=complex)[k] for k in range(3))


def rep(u: BasisUnit) -> np.ndarray:
    try:
        diag = _DIAGONALS[u]
    except KeyError:
        raise ValueError(f"{u.token} is not in the commutative subalgebra {{1, i3, e3, i0}}") from None
    return np.diag(np.array(diag, dtype=complex))


def homomorphism_check() -> VerificationReport:
    """rep(a) rep(b) == sign * rep(unit) for every ordered pair of A units."""
    col = _Collector("MATRIX_HOMOMORPHISM")
    for a in A_UNITS:
        for b in A_UNITS:
            p = basis_product(a, b)
            got = rep(a) @ rep(b)
            want = p.sign * rep(p.unit)
            col.check(f"{a.token}*{b.token}={p}", np.diag(want).tolist(), np.diag(got).tolist(),
                      np.array_equal(got, want))
    return col.report()


def eigen_decomposition(u: BasisUnit) -> list[tuple[np.ndarray, complex]]:
    """Pairs (xi_k, lambda_k) with rep(u) xi_k = lambda_k xi_k, k = 1..3."""
    m = rep(u)
    out = []
    for xi in GENERATIONS:
        image = m @ xi
        k = int(np.flatnonzero(xi)[0])
        lam = complex(image[k])
        if not np.array_equal(image, lam * xi):
            raise ArithmeticError(f"xi_{k + 1} is not an eigenvector of rep({u.token})")
        out.append((xi.copy(), lam))
    return out
