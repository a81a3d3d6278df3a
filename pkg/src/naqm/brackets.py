"""Commutator, associator and the non-associative ternary bracket.

Also builds the scaled operators used by the dynamics:

* Hamiltonian factors ``h_{m+4} = u_{m+4} * sqrt(I*hbar/2)``
* spin operators ``S_k = i_k * (I*hbar/2)``
* companion operators ``L_k = e_k * (I*hbar/2)``
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .algebra import AlgebraElement, BasisUnit, unit

__all__ = [
    "ModelId",
    "PhysicalConstants",
    "commutator",
    "associator",
    "na_bracket",
    "hamiltonian_factor",
    "spin_operator",
    "l_operator",
    "levi_civita",
]


class ModelId(enum.Enum):
    QUATERNIONIC = "quaternionic"
    BIQUATERNIONIC = "biquaternionic"


@dataclass(frozen=True)
class PhysicalConstants:
    hbar_tilde: float = 1.0
    mu: float = 1.0

    def __post_init__(self):
        if not self.hbar_tilde > 0:
            raise ValueError(f"hbar_tilde must be positive, got {self.hbar_tilde}")

    @property
    def operator_scale(self) -> complex:
        """``I*hbar/2``, the coefficient carried by S_k and L_k."""
        return 0.5j * self.hbar_tilde

    @property
    def factor_scale(self) -> complex:
        """Principal square root of ``I*hbar/2``."""
        return cmath.sqrt(self.operator_scale)


def levi_civita(i: int, j: int, k: int) -> int:
    """Permutation symbol on indices 1..3."""
    return (i - j) * (j - k) * (k - i) // 2


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


def associator(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
    return (x * y) * z - x * (y * z)


def na_bracket(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> AlgebraElement:
    """Ternary bracket ``a(bc) - (ca)b``.

    Defined for arbitrary elements; the identities it is known to satisfy
    only hold when ``c`` is taken from an associative subalgebra.
    """
    return a * (b * c) - (c * a) * b


def hamiltonian_factor(model: ModelId, m: int, k: PhysicalConstants = PhysicalConstants(),
                       *, literal_h4: bool = False) -> AlgebraElement:
    """Factor ``h_{m+4}`` for m = 0..3.

    In the biquaternionic model the m = 1..3 factors are built on ``e_{m+4}``
    while ``h_4`` stays on ``i4``, the unit every biquaternionic bracket
    identity has in its first slot.  ``literal_h4=True`` builds ``h_4`` on
    ``e4`` instead.
    """
    if m not in (0, 1, 2, 3):
        raise ValueError(f"m must be in 0..3, got {m}")
    if model is ModelId.QUATERNIONIC or (m == 0 and not literal_h4):
        base = BasisUnit.im(m + 4)
    else:
        base = BasisUnit.eps(m + 4)
    return unit(base, k.factor_scale)


def spin_operator(k: int, c: PhysicalConstants = PhysicalConstants()) -> AlgebraElement:
    if k not in (1, 2, 3):
        raise ValueError(f"k must be in 1..3, got {k}")
    return unit(BasisUnit.im(k), c.operator_scale)


def l_operator(k: int, c: PhysicalConstants = PhysicalConstants()) -> AlgebraElement:
    if k not in (1, 2, 3):
        raise ValueError(f"k must be in 1..3, got {k}")
    return unit(BasisUnit.eps(k), c.operator_scale)
