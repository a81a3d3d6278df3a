"""Enumerated identity suites over the sedenion table and the ternary bracket.

Every suite walks a fixed, finite case set in a fixed order (basis units in
canonical order, loop indices ascending), so reports are reproducible down to
witness ordering.  Identity suites use exact comparisons; only
``SCALED_BRACKETS`` involves irrational scalars and compares to 1e-12.
"""

from __future__ import annotations

import csv
import enum
import io
from importlib import resources

from . import algebra
from .algebra import (
    AlgebraElement,
    BasisUnit,
    SignedUnit,
    Subalgebra,
    basis_product,
    sorted_units,
    subalgebra_units,
    unit,
    zero,
)
from .brackets import (
    ModelId,
    PhysicalConstants,
    associator,
    hamiltonian_factor,
    l_operator,
    levi_civita,
    na_bracket,
    spin_operator,
)
from .report import Failure, VerificationReport, _Collector

__all__ = [
    "SuiteId",
    "run_suite",
    "run_all",
    "all_passed",
    "alternativity_report",
    "associativity_report",
    "load_reference_table",
]

SCALED_TOL = 1e-12

I_ = BasisUnit.im
E_ = BasisUnit.eps


class SuiteId(enum.Enum):
    TABLE_FIDELITY = "table_fidelity"
    UNIT_SQUARES = "unit_squares"
    SUBALGEBRA_CLOSURE = "subalgebra_closure"
    QUATERNION_BRACKET = "quaternion_bracket"
    BIQUATERNION_BRACKET = "biquaternion_bracket"
    NONTRIVIALITY = "nontriviality"
    LEIBNIZ_QUATERNION = "leibniz_quaternion"
    LEIBNIZ_BIQUATERNION = "leibniz_biquaternion"
    LEIBNIZ_FAILURE = "leibniz_failure"
    SCALED_BRACKETS = "scaled_brackets"
    COMMUTATIVITY_A = "commutativity_a"
    ALTERNATIVITY = "alternativity"

    @property
    def slug(self) -> str:
        return self.value.replace("_", "-")

    @classmethod
    def from_slug(cls, slug: str) -> "SuiteId":
        return cls(slug.replace("-", "_").lower())


def load_reference_table() -> list[list[SignedUnit]]:
    """Second, independently keyed copy of the table shipped as package data."""
    text = resources.files("naqm").joinpath("data/sedenion_table.csv").read_text()
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    expected_header = [""] + [u.token for u in BasisUnit]
    if header != expected_header:
        raise ValueError(f"reference table header mismatch: {header}")
    return [[SignedUnit.parse(tok) for tok in row[1:]] for row in body]


def _ek(prefix: str, k: int) -> AlgebraElement:
    return unit(I_(k) if prefix == "i" else E_(k))


def _sum_eps(m: int, n: int, coeff: int, prefix: str) -> AlgebraElement:
    """``coeff * eps_{mnk} * u_k`` summed over k."""
    out = zero()
    for k in (1, 2, 3):
        e = levi_civita(m, n, k)
        if e:
            out = out + (coeff * e) * _ek(prefix, k)
    return out


# -- suites -----------------------------------------------------------------

def _table_fidelity(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("TABLE_FIDELITY")
    ref = load_reference_table()
    if len(ref) != algebra.DIM or any(len(r) != algebra.DIM for r in ref):
        col.check("shape", "16x16", f"{len(ref)} rows", False)
        return col.report()
    for a in BasisUnit:
        for b in BasisUnit:
            got = basis_product(a, b)
            want = ref[a][b]
            col.check(f"{a.token}*{b.token}", want, got, got == want)
    return col.report()


def _unit_squares(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("UNIT_SQUARES")
    one = unit(BasisUnit.ONE)
    for u in BasisUnit:
        if u is BasisUnit.ONE:
            continue
        want = -one if u.name.startswith("I") else one
        got = unit(u) * unit(u)
        col.check(f"{u.token}^2", want, got, got == want)
    return col.report()


def _closure(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("SUBALGEBRA_CLOSURE")
    for sub in Subalgebra:
        units = subalgebra_units(sub)
        for a in sorted_units(units):
            for b in sorted_units(units):
                p = basis_product(a, b)
                col.check(f"{sub.name} {a.token}*{b.token}", f"unit in {sub.name}", p, p.unit in units)
    return col.report()


def _quaternion_bracket(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("QUATERNION_BRACKET")
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            got = na_bracket(unit(I_(4)), unit(I_(m + 4)), unit(I_(n)))
            want = _sum_eps(m, n, -2, "i")
            col.check(f"[i4,i{m + 4},i{n}]", want, got, got == want)
    return col.report()


def _biquaternion_bracket(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("BIQUATERNION_BRACKET")
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            got = na_bracket(unit(I_(4)), unit(E_(m + 4)), unit(I_(n)))
            want = _sum_eps(m, n, -2, "e")
            col.check(f"[i4,e{m + 4},i{n}]", want, got, got == want)
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            got = na_bracket(unit(I_(4)), unit(E_(m + 4)), unit(E_(n)))
            want = _sum_eps(m, n, 2, "i")
            col.check(f"[i4,e{m + 4},e{n}]", want, got, got == want)
    return col.report()


def _nontriviality(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("NONTRIVIALITY", negative=True)
    families = [
        ("i", sorted_units(subalgebra_units(Subalgebra.QUATERNION) - {BasisUnit.ONE})),
        ("e", sorted_units(subalgebra_units(Subalgebra.BIQUATERNION) - {BasisUnit.ONE})),
    ]
    a = unit(I_(4))
    for prefix, candidates in families:
        for m in (1, 2, 3):
            b = _ek(prefix, m + 4)
            found = None
            for cand in candidates:
                x = unit(cand)
                left_broken = a * (b * x) != (a * b) * x
                right_broken = (x * a) * b != x * (a * b)
                if left_broken and right_broken:
                    found = cand
                    break
            case = f"u=i4 v={prefix}{m + 4}"
            col.total += 1
            if found is None:
                col.failures.append(Failure(case, "some basis b breaking both groupings", None))
            else:
                x = unit(found)
                col.witnesses.append(Failure(f"{case} b={found.token}",
                                             f"u(vb)={a * (b * x)}, (uv)b={(a * b) * x}",
                                             f"(bu)v={(x * a) * b}, b(uv)={x * (a * b)}"))
    return col.report()


def _leibniz_case(col, label, h1, h2, b, c, check_antisym=True) -> None:
    lhs = na_bracket(h1, h2, b * c)
    rhs = b * na_bracket(h1, h2, c) + na_bracket(h1, h2, b) * c
    ok = lhs == rhs
    if check_antisym:
        swapped = na_bracket(h1, h2, c * b)
        ok = ok and lhs == -swapped
    col.check(label, rhs, lhs, ok)


def _leibniz_quaternion(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("LEIBNIZ_QUATERNION")
    h1 = unit(I_(4))
    for m in (1, 2, 3):
        h2 = unit(I_(m + 4))
        for k in (1, 2, 3):
            for l in (1, 2, 3):
                _leibniz_case(col, f"m={m} b=i{k} c=i{l}", h1, h2, unit(I_(k)), unit(I_(l)))
    return col.report()


def _leibniz_biquaternion(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("LEIBNIZ_BIQUATERNION")
    h1 = unit(I_(4))
    for pb, pc in (("i", "i"), ("i", "e"), ("e", "i"), ("e", "e")):
        for m in (1, 2, 3):
            h2 = unit(E_(m + 4))
            for k in (1, 2, 3):
                for l in (1, 2, 3):
                    _leibniz_case(col, f"m={m} b={pb}{k} c={pc}{l}", h1, h2, _ek(pb, k), _ek(pc, l))
    return col.report()


def _leibniz_failure(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("LEIBNIZ_FAILURE", negative=True)
    h1 = unit(I_(4))
    families = [
        ("quaternionic", "i", [I_(n) for n in (4, 5, 6, 7)]),
        ("biquaternionic", "e", [I_(n) for n in (4, 5, 6, 7)] + [E_(n) for n in (4, 5, 6, 7)]),
    ]
    for family, prefix, domain in families:
        found = 0
        for m in (1, 2, 3):
            h2 = _ek(prefix, m + 4)
            for b in domain:
                for c in domain:
                    col.total += 1
                    lhs = na_bracket(h1, h2, unit(b) * unit(c))
                    rhs = unit(b) * na_bracket(h1, h2, unit(c)) + na_bracket(h1, h2, unit(b)) * unit(c)
                    if lhs != rhs:
                        found += 1
                        col.witnesses.append(
                            Failure(f"{family} m={m} b={b.token} c={c.token}", lhs, rhs))
        if not found:
            col.failures.append(Failure(f"{family} family", "at least one violation", "none"))
        col.notes.append(f"{family}: {found} violating cases")
    return col.report()


def _scaled_brackets(c: PhysicalConstants) -> VerificationReport:
    col = _Collector("SCALED_BRACKETS")
    ih = 1j * c.hbar_tilde
    for model in ModelId:
        h4 = hamiltonian_factor(model, 0, c)
        for m in (1, 2, 3):
            hm = hamiltonian_factor(model, m, c)
            for n in (1, 2, 3):
                if model is ModelId.QUATERNIONIC:
                    pairs = [("S", spin_operator, spin_operator, -1)]
                else:
                    pairs = [("S", spin_operator, l_operator, -1), ("L", l_operator, spin_operator, 1)]
                for name, arg_op, out_op, sign in pairs:
                    got = na_bracket(h4, hm, arg_op(n, c))
                    want = zero()
                    for k in (1, 2, 3):
                        e = levi_civita(m, n, k)
                        if e:
                            want = want + (sign * ih * e) * out_op(k, c)
                    col.check(f"{model.value} [h4,h{m + 4},{name}{n}]", want, got,
                              got.isclose(want, SCALED_TOL))
    col.notes.append(f"hbar_tilde = {c.hbar_tilde!r}")
    return col.report()


def _commutativity_a(_c: PhysicalConstants) -> VerificationReport:
    col = _Collector("COMMUTATIVITY_A")
    units = sorted_units(subalgebra_units(Subalgebra.COMMUTATIVE_A))
    for a in units:
        for b in units:
            ab, ba = unit(a) * unit(b), unit(b) * unit(a)
            col.check(f"{a.token}*{b.token}", ba, ab, ab == ba)
    return col.report()


def _alternativity_pairs(sub: Subalgebra):
    units = sorted_units(subalgebra_units(sub))
    for a in units:
        x = unit(a)
        for b in units:
            y = unit(b)
            left = (x * x) * y - x * (x * y)
            right = (y * x) * x - y * (x * x)
            yield f"{sub.name} x={a.token} y={b.token}", left, right


def alternativity_report(sub: Subalgebra) -> VerificationReport:
    """Checks (xx)y = x(xy) and (yx)x = y(xx) over all ordered basis pairs."""
    col = _Collector(f"ALTERNATIVITY_{sub.name}")
    for case, left, right in _alternativity_pairs(sub):
        col.check(case, "0, 0", f"{left}, {right}", left.is_zero() and right.is_zero())
    return col.report()


def associativity_report(sub: Subalgebra) -> VerificationReport:
    """Checks (xy)z = x(yz) over all ordered basis triples of ``sub``."""
    col = _Collector(f"ASSOCIATIVITY_{sub.name}")
    units = sorted_units(subalgebra_units(sub))
    for a in units:
        for b in units:
            for c in units:
                got = associator(unit(a), unit(b), unit(c))
                col.check(f"({a.token},{b.token},{c.token})", zero(), got, got.is_zero())
    return col.report()


def _alternativity(_c: PhysicalConstants) -> VerificationReport:
    # Only the octonion sub-result decides pass/fail; the others are recorded.
    col = _Collector("ALTERNATIVITY")
    for sub in Subalgebra:
        sub_report = alternativity_report(sub)
        col.total += sub_report.total_cases
        bad = sub_report.failures
        col.notes.append(f"{sub.name}: {sub_report.total_cases - len(bad)}/{sub_report.total_cases} pairs alternative")
        if sub is Subalgebra.OCTONION:
            col.failures.extend(bad)
        else:
            col.witnesses.extend(bad)
    return col.report()


_SUITES = {
    SuiteId.TABLE_FIDELITY: _table_fidelity,
    SuiteId.UNIT_SQUARES: _unit_squares,
    SuiteId.SUBALGEBRA_CLOSURE: _closure,
    SuiteId.QUATERNION_BRACKET: _quaternion_bracket,
    SuiteId.BIQUATERNION_BRACKET: _biquaternion_bracket,
    SuiteId.NONTRIVIALITY: _nontriviality,
    SuiteId.LEIBNIZ_QUATERNION: _leibniz_quaternion,
    SuiteId.LEIBNIZ_BIQUATERNION: _leibniz_biquaternion,
    SuiteId.LEIBNIZ_FAILURE: _leibniz_failure,
    SuiteId.SCALED_BRACKETS: _scaled_brackets,
    SuiteId.COMMUTATIVITY_A: _commutativity_a,
    SuiteId.ALTERNATIVITY: _alternativity,
}


def run_suite(suite: SuiteId, constants: PhysicalConstants = PhysicalConstants()) -> VerificationReport:
    return _SUITES[suite](constants)


def run_all(constants: PhysicalConstants = PhysicalConstants()) -> list[VerificationReport]:
    return [run_suite(s, constants) for s in SuiteId]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
