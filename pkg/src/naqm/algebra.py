"""Sedenion algebra: basis units, structure constants and linear combinations.

The 16 basis units are ordered as the multiplication table rows::

    1, i1, ..., i7, i0, e1, ..., e7

where ``i_n`` square to -1 and ``e_n`` square to +1.  Coefficients are
complex; the scalar imaginary unit ``I`` is the coefficient-field ``1j`` and
is unrelated to the basis unit ``i0``.
"""

from __future__ import annotations

import enum
import numbers
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "BasisUnit",
    "SignedUnit",
    "AlgebraElement",
    "Subalgebra",
    "basis_product",
    "multiply",
    "linear_combine",
    "subalgebra_units",
    "closure_check",
    "export_table",
    "unit",
    "zero",
    "scalar",
    "DIM",
    "DEFAULT_TOL",
]

DIM = 16
DEFAULT_TOL = 1e-12


class BasisUnit(enum.IntEnum):
    ONE = 0
    I1 = 1
    I2 = 2
    I3 = 3
    I4 = 4
    I5 = 5
    I6 = 6
    I7 = 7
    I0 = 8
    E1 = 9
    E2 = 10
    E3 = 11
    E4 = 12
    E5 = 13
    E6 = 14
    E7 = 15

    @property
    def token(self) -> str:
        """ASCII spelling: ``1``, ``i0``..``i7``, ``e1``..``e7``."""
        return "1" if self is BasisUnit.ONE else self.name.lower()

    @classmethod
    def from_token(cls, token: str) -> "BasisUnit":
        try:
            return _BY_TOKEN[token]
        except KeyError:
            raise ValueError(f"unknown basis token {token!r}") from None

    @classmethod
    def im(cls, n: int) -> "BasisUnit":
        """The unit ``i_n`` for n = 0..7."""
        if not 0 <= n <= 7:
            raise ValueError(f"i_{n} does not exist")
        return cls[f"I{n}"]

    @classmethod
    def eps(cls, n: int) -> "BasisUnit":
        """The unit ``e_n`` for n = 1..7."""
        if not 1 <= n <= 7:
            raise ValueError(f"e_{n} does not exist")
        return cls[f"E{n}"]

    def __str__(self) -> str:
        return self.token


_BY_TOKEN = {u.token: u for u in BasisUnit}


class SignedUnit(NamedTuple):
    sign: int
    unit: BasisUnit

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.unit.token

    @classmethod
    def parse(cls, token: str) -> "SignedUnit":
        token = token.strip()
        sign = -1 if token.startswith("-") else 1
        return cls(sign, BasisUnit.from_token(token.lstrip("+-")))


# Rows and columns in canonical order.  Typed by hand from the published
# table; the packaged CSV is a separate transcription checked against this.
_TABLE_ROWS = """
1  i1  i2  i3  i4  i5  i6  i7  i0  e1  e2  e3  e4  e5  e6  e7
i1 -1  i3 -i2  i5 -i4 -i7  i6 -e1  i0  e3 -e2  e5 -e4 -e7  e6
i2 -i3 -1  i1  i6  i7 -i4 -i5 -e2 -e3  i0  e1  e6  e7 -e4 -e5
i3  i2 -i1 -1  i7 -i6  i5 -i4 -e3  e2 -e1  i0  e7 -e6  e5 -e4
i4 -i5 -i6 -i7 -1   i1  i2  i3 -e4 -e5 -e6 -e7  i0  e1  e2  e3
i5  i4 -i7  i6 -i1 -1  -i3  i2 -e5  e4 -e7  e6 -e1  i0 -e3  e2
i6  i7  i4 -i5 -i2  i3 -1  -i1 -e6  e7  e4 -e5 -e2  e3  i0 -e1
i7 -i6  i5  i4 -i3 -i2  i1 -1  -e7 -e6  e5  e4 -e3 -e2  e1  i0
i0 -e1 -e2 -e3 -e4 -e5 -e6 -e7 -1   i1  i2  i3  i4  i5  i6  i7
e1  i0  e3 -e2  e5 -e4 -e7  e6  i1  1  -i3  i2 -i5  i4  i7 -i6
e2 -e3  i0  e1  e6  e7 -e4 -e5  i2  i3  1  -i1 -i6 -i7  i4  i5
e3  e2 -e1  i0  e7 -e6  e5 -e4  i3 -i2  i1  1  -i7  i6 -i5  i4
e4 -e5 -e6 -e7  i0  e1  e2  e3  i4  i5  i6  i7  1  -i1 -i2 -i3
e5  e4 -e7  e6 -e1  i0 -e3  e2  i5 -i4  i7 -i6  i1  1   i3 -i2
e6  e7  e4 -e5 -e2  e3  i0 -e1  i6 -i7 -i4  i5  i2 -i3  1   i1
e7 -e6  e5  e4 -e3 -e2  e1  i0  i7  i6 -i5 -i4  i3  i2 -i1  1
"""


def _build_table() -> tuple[tuple[SignedUnit, ...], ...]:
    rows = [line.split() for line in _TABLE_ROWS.strip().splitlines()]
    assert len(rows) == DIM and all(len(r) == DIM for r in rows)
    return tuple(tuple(SignedUnit.parse(tok) for tok in row) for row in rows)


TABLE: tuple[tuple[SignedUnit, ...], ...] = _build_table()

# STRUCTURE[a, b, c] = sign if e_a e_b = sign * e_c else 0
STRUCTURE = np.zeros((DIM, DIM, DIM), dtype=np.int8)
for _a in range(DIM):
    for _b in range(DIM):
        _cell = TABLE[_a][_b]
        STRUCTURE[_a, _b, _cell.unit] = _cell.sign
STRUCTURE.flags.writeable = False
_STRUCTURE_FLAT = STRUCTURE.astype(np.complex128).reshape(DIM * DIM, DIM)


def basis_product(a: BasisUnit, b: BasisUnit) -> SignedUnit:
    return TABLE[a][b]


class AlgebraElement:
    """Immutable complex linear combination of the 16 basis units.

    ``==`` is exact; use :meth:`isclose` for floating results.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[complex] | None = None):
        c = np.zeros(DIM, dtype=np.complex128)
        if coefficients is not None:
            vals = np.array(list(coefficients), dtype=np.complex128)
            if vals.shape != (DIM,):
                raise ValueError(f"expected {DIM} coefficients, got shape {vals.shape}")
            c[:] = vals
        c.flags.writeable = False
        self._c = c

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "AlgebraElement":
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj._c = arr
        return obj

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def __getitem__(self, u: BasisUnit | int) -> complex:
        return complex(self._c[int(u)])

    def support(self) -> list[BasisUnit]:
        return [BasisUnit(k) for k in np.flatnonzero(self._c)]

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._c) <= tol))

    def isclose(self, other: "AlgebraElement", tol: float = DEFAULT_TOL) -> bool:
        return bool(np.max(np.abs(self._c - other._c)) <= tol)

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self._c)))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self._c)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement._wrap(self._c + other._c)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return AlgebraElement._wrap(self._c - other._c)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._wrap(-self._c)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, numbers.Number):
            return AlgebraElement._wrap(self._c * complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return AlgebraElement._wrap(self._c * complex(other))
        return NotImplemented

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the basis table."""
    # (x outer y) flattened against the (256, 16) structure matrix
    out = np.outer(x.coefficients, y.coefficients).reshape(DIM * DIM) @ _STRUCTURE_FLAT
    return AlgebraElement._wrap(out)


def linear_combine(terms: Iterable[tuple[complex, AlgebraElement]]) -> AlgebraElement:
    acc = np.zeros(DIM, dtype=np.complex128)
    for coeff, el in terms:
        acc = acc + complex(coeff) * el.coefficients
    return AlgebraElement._wrap(acc)


def unit(u: BasisUnit | str, coeff: complex = 1) -> AlgebraElement:
    if isinstance(u, str):
        u = BasisUnit.from_token(u)
    c = np.zeros(DIM, dtype=np.complex128)
    c[int(u)] = coeff
    return AlgebraElement._wrap(c)


def zero() -> AlgebraElement:
    return AlgebraElement._wrap(np.zeros(DIM, dtype=np.complex128))


def scalar(value: complex) -> AlgebraElement:
    return unit(BasisUnit.ONE, value)


class Subalgebra(enum.Enum):
    QUATERNION = "quaternion"
    BIQUATERNION = "biquaternion"
    OCTONION = "octonion"
    COMMUTATIVE_A = "commutative_a"
    FULL = "full"


_B = BasisUnit
_SUBALGEBRA_UNITS = {
    Subalgebra.QUATERNION: frozenset({_B.ONE, _B.I1, _B.I2, _B.I3}),
    Subalgebra.BIQUATERNION: frozenset({_B.ONE, _B.I0, _B.I1, _B.I2, _B.I3, _B.E1, _B.E2, _B.E3}),
    # i0 is excluded: i0 * i1 = -e1 leaves the span.
    Subalgebra.OCTONION: frozenset({_B.ONE, _B.I1, _B.I2, _B.I3, _B.I4, _B.I5, _B.I6, _B.I7}),
    Subalgebra.COMMUTATIVE_A: frozenset({_B.ONE, _B.I3, _B.E3, _B.I0}),
    Subalgebra.FULL: frozenset(BasisUnit),
}


def subalgebra_units(sub: Subalgebra) -> frozenset[BasisUnit]:
    return _SUBALGEBRA_UNITS[sub]


def sorted_units(units: Iterable[BasisUnit]) -> list[BasisUnit]:
    return sorted(units, key=int)


def closure_check(units: Iterable[BasisUnit]) -> bool:
    """True iff every pairwise basis product stays inside ``units``."""
    units = frozenset(units)
    if BasisUnit.ONE not in units:
        raise ValueError("unit set must contain the identity 1")
    return all(TABLE[a][b].unit in units for a in units for b in units)


def export_table(fmt: str = "csv") -> str:
    tokens = [u.token for u in BasisUnit]
    if fmt == "csv":
        lines = [",".join([""] + tokens)]
        for a in BasisUnit:
            lines.append(",".join([a.token] + [str(TABLE[a][b]) for b in BasisUnit]))
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["| | " + " | ".join(tokens) + " |", "|" + "---|" * (DIM + 1)]
        for a in BasisUnit:
            lines.append(f"| **{a.token}** | " + " | ".join(str(TABLE[a][b]) for b in BasisUnit) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r} (expected 'csv' or 'markdown')")


def _format_number(x: float) -> str:
    if np.isfinite(x) and x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def format_coefficient(c: complex) -> str:
    """``-2`` for reals, ``(a+bI)`` when the imaginary part is nonzero."""
    if c.imag == 0:
        return _format_number(c.real)
    im = _format_number(c.imag)
    if not im.startswith("-"):
        im = "+" + im
    return f"({_format_number(c.real)}{im}I)"


def format_element(x: AlgebraElement) -> str:
    """Canonical text form, e.g. ``-2*i3`` or ``i1 + (0+1I)*e1``; zero is ``0``."""
    parts: list[str] = []
    for k in np.flatnonzero(x.coefficients):
        c = complex(x.coefficients[k])
        u = BasisUnit(int(k))
        neg = c.imag == 0 and c.real < 0
        if neg:
            c = -c
        if u is BasisUnit.ONE:
            term = format_coefficient(c)
        elif c == 1:
            term = u.token
        else:
            term = f"{format_coefficient(c)}*{u.token}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append((" - " if neg else " + ") + term)
    return "".join(parts) if parts else "0"
