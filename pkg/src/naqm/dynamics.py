"""Heisenberg dynamics of the standard, quaternionic and extended qubits.

Three systems are integrated on their component equations:

* standard qubit          ds/dt = omega x s
* non-associative qubit   ds/dt = -hbar (omega x s)
* extended qubit          ds/dt = -n1 hbar (omega1 x l),  dl/dt = n2 hbar (omega2 x s)

:func:`operator_rhs` rebuilds the same right-hand sides from the algebra
(ternary bracket of the scaled operators) and projects them back, which is
the cross-check between the two routes.  States are plain float arrays:
shape ``(3,)`` for ``s`` and ``(6,)`` for the concatenation ``(s, l)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraElement, BasisUnit, linear_combine
from .brackets import (
    ModelId,
    PhysicalConstants,
    hamiltonian_factor,
    l_operator,
    levi_civita,
    na_bracket,
    spin_operator,
)
from .report import _Collector

__all__ = [
    "DynamicsModel",
    "FieldConfig",
    "Trajectory",
    "QubitSpinor",
    "BlowUpError",
    "ProjectionError",
    "standard_qubit_rhs",
    "na_qubit_rhs",
    "extended_rhs",
    "operator_rhs",
    "integrate",
    "generator_matrix",
    "analytic_rotation",
    "analytic_extended",
    "spinor_norm_and_inner",
    "pauli_observable",
    "pauli_relations_check",
    "PAULI",
]

PROJECTION_TOL = 1e-12


class DynamicsModel(enum.Enum):
    STANDARD = "standard"
    NA_QUBIT = "na-qubit"
    EXTENDED = "extended"

    @property
    def state_size(self) -> int:
        return 6 if self is DynamicsModel.EXTENDED else 3


class BlowUpError(ArithmeticError):
    """Integration produced a non-finite (or over-threshold) state."""

    def __init__(self, time: float, step: int, message: str | None = None):
        self.time = time
        self.step = step
        super().__init__(message or f"state blew up at t = {time:.17g} (step {step})")


class ProjectionError(ArithmeticError):
    """An operator-level derivative did not lie in the expected span."""


def _vec3(v, name: str) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"{name} must have 3 components, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class FieldConfig:
    """Angular velocities (``omega_m = mu * B_m``) and coupling signs."""

    omega: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))
    omega1: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))
    omega2: np.ndarray = field(default_factory=lambda: np.array([0.0, 0.0, 1.0]))
    n1: int = 1
    n2: int = 1

    def __post_init__(self):
        for name in ("omega", "omega1", "omega2"):
            object.__setattr__(self, name, _vec3(getattr(self, name), name))
        if self.n1 not in (1, -1) or self.n2 not in (1, -1):
            raise ValueError(f"n1, n2 must be +1 or -1, got {self.n1}, {self.n2}")

    @classmethod
    def from_field(cls, b, mu: float = 1.0, **kw) -> "FieldConfig":
        return cls(omega=mu * _vec3(b, "B"), **kw)


# -- component right-hand sides ------------------------------------------

def standard_qubit_rhs(s, f: FieldConfig) -> np.ndarray:
    return np.cross(f.omega, s)


def na_qubit_rhs(s, f: FieldConfig, hbar_tilde: float = 1.0) -> np.ndarray:
    return -hbar_tilde * np.cross(f.omega, s)


def extended_rhs(x, f: FieldConfig, hbar_tilde: float = 1.0) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    s, l = x[:3], x[3:]
    ds = -f.n1 * hbar_tilde * np.cross(f.omega1, l)
    dl = f.n2 * hbar_tilde * np.cross(f.omega2, s)
    return np.concatenate([ds, dl])


def _rhs(model: DynamicsModel, f: FieldConfig, hbar_tilde: float):
    if model is DynamicsModel.STANDARD:
        return lambda x: standard_qubit_rhs(x, f)
    if model is DynamicsModel.NA_QUBIT:
        return lambda x: na_qubit_rhs(x, f, hbar_tilde)
    return lambda x: extended_rhs(x, f, hbar_tilde)


def generator_matrix(model: DynamicsModel, f: FieldConfig, hbar_tilde: float = 1.0) -> np.ndarray:
    """Matrix M with rhs(x) = M x; column j is the rhs applied to the j-th unit vector."""
    rhs = _rhs(model, f, hbar_tilde)
    return np.column_stack([rhs(e) for e in np.eye(model.state_size)])


# -- operator route ----------------------------------------------------------

def _coupling(model: ModelId, omega: np.ndarray, n: int, c: PhysicalConstants,
              literal_h4: bool) -> AlgebraElement:
    """``-n (omega . mu)`` with the dipole ``mu_m = h_{m+4}`` (mu folded into omega)."""
    return linear_combine((-n * omega[m - 1], hamiltonian_factor(model, m, c, literal_h4=literal_h4))
                          for m in (1, 2, 3))


def _project(el: AlgebraElement, units: list[BasisUnit], scale: complex) -> np.ndarray:
    coeffs = el.coefficients / scale
    idx = [int(u) for u in units]
    comps = coeffs[idx]
    rest = np.delete(coeffs, idx)
    residual = max(float(np.max(np.abs(rest))), float(np.max(np.abs(comps.imag))))
    size = max(1.0, float(np.max(np.abs(comps))))
    if residual > PROJECTION_TOL * size:
        raise ProjectionError(f"derivative leaves the operator span (residual {residual:.3g})")
    return comps.real.copy()


def operator_rhs(model: ModelId, state, f: FieldConfig, c: PhysicalConstants = PhysicalConstants(),
                 *, literal_h4: bool = False) -> np.ndarray:
    """Right-hand side evaluated as an algebra element and projected back.

    Quaternionic: ``dS/dt = I [h4, -(omega.mu), S]`` with ``S = s_k S_k``.
    Biquaternionic: ``dS/dt = -I [h4, -n1 (omega1.mu), L]`` and
    ``dL/dt = -I [h4, -n2 (omega2.mu), S]``.  The matching component equations
    carry an extra factor ``hbar_tilde``.
    """
    scale = c.operator_scale
    h4 = hamiltonian_factor(model, 0, c, literal_h4=literal_h4)
    spins = [BasisUnit.im(k) for k in (1, 2, 3)]
    if model is ModelId.QUATERNIONIC:
        s = _vec3(state, "state")
        S = linear_combine((s[k - 1], spin_operator(k, c)) for k in (1, 2, 3))
        dS = 1j * na_bracket(h4, _coupling(model, f.omega, 1, c, literal_h4), S)
        return _project(dS, spins, scale)

    x = np.asarray(state, dtype=float)
    if x.shape != (6,):
        raise ValueError(f"extended state must have 6 components, got shape {x.shape}")
    s, l = x[:3], x[3:]
    S = linear_combine((s[k - 1], spin_operator(k, c)) for k in (1, 2, 3))
    L = linear_combine((l[k - 1], l_operator(k, c)) for k in (1, 2, 3))
    dS = -1j * na_bracket(h4, _coupling(model, f.omega1, f.n1, c, literal_h4), L)
    dL = -1j * na_bracket(h4, _coupling(model, f.omega2, f.n2, c, literal_h4), S)
    return np.concatenate([_project(dS, spins, scale),
                           _project(dL, [BasisUnit.eps(k) for k in (1, 2, 3)], scale)])


# -- integration ---------------------------------------------------------------

@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray
    model: DynamicsModel
    n1n2: int = 1

    def __len__(self) -> int:
        return len(self.times)

    @property
    def s(self) -> np.ndarray:
        return self.states[:, :3]

    @property
    def l(self) -> np.ndarray:
        if self.model is not DynamicsModel.EXTENDED:
            raise AttributeError("only the extended model carries l")
        return self.states[:, 3:]

    @property
    def conserved_label(self) -> str:
        if self.model is not DynamicsModel.EXTENDED:
            return "|s|^2"
        return "|s|^2-|l|^2" if self.n1n2 > 0 else "|s|^2+|l|^2"

    def conserved(self) -> np.ndarray:
        """|s|^2 for the rotation models; |s|^2 - n1 n2 |l|^2 for the extended one.

        The extended quantity is invariant only when omega1 == omega2.
        """
        q = np.sum(self.s ** 2, axis=1)
        if self.model is DynamicsModel.EXTENDED:
            q = q - self.n1n2 * np.sum(self.l ** 2, axis=1)
        return q

    def drift(self) -> float:
        q = self.conserved()
        return float(np.max(np.abs(q - q[0])))

    def relative_drift(self) -> float:
        """Drift divided by max(1, largest |x|^2 along the run).

        Hyperbolic runs of the extended model grow like exp(t); past |x|^2 ~ 1e8
        an absolute 1e-8 drift is below double-precision rounding, so this is
        the meaningful figure there.  For bounded runs it equals :meth:`drift`.
        """
        scale = max(1.0, float(np.max(np.sum(self.states ** 2, axis=1))))
        return self.drift() / scale

    def to_csv(self) -> str:
        cols = ["t", "s1", "s2", "s3"]
        if self.model is DynamicsModel.EXTENDED:
            cols += ["l1", "l2", "l3"]
        lines = [",".join(cols)]
        for t, row in zip(self.times, self.states):
            lines.append(",".join(f"{v:.17g}" for v in (t, *row)))
        return "\n".join(lines) + "\n"


def step_count(t_max: float, dt: float) -> int:
    """Number of uniform steps; the step is stretched slightly to end on t_max."""
    return max(1, round(t_max / dt))


def integrate(model: DynamicsModel, initial, f: FieldConfig, t_max: float, dt: float,
              *, hbar_tilde: float = 1.0, overflow: float | None = None) -> Trajectory:
    """Classical fixed-step RK4 from t = 0 to t_max.

    The step actually used is ``t_max / round(t_max / dt)`` so the last sample
    lands on ``t_max``.  Raises :class:`BlowUpError` on a non-finite state or,
    when ``overflow`` is given, once any component exceeds it in magnitude.
    """
    if not (dt > 0 and math.isfinite(dt)):
        raise ValueError(f"dt must be positive and finite, got {dt}")
    if not (math.isfinite(t_max) and t_max >= dt):
        raise ValueError(f"t_max must be finite and >= dt, got {t_max}")
    x = np.asarray(initial, dtype=float)
    if x.shape != (model.state_size,):
        raise ValueError(f"{model.value} state needs {model.state_size} components, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("initial state must be finite")

    # Every model is linear and autonomous, so one RK4 step is the fixed matrix
    # I + hM + (hM)^2/2 + (hM)^3/6 + (hM)^4/24 applied to the state.
    n = step_count(t_max, dt)
    h = t_max / n
    hm = h * generator_matrix(model, f, hbar_tilde)
    step = np.eye(x.size)
    term = np.eye(x.size)
    for k in range(1, 5):
        term = term @ hm / k
        step = step + term
    times = np.arange(n + 1) * h
    times[-1] = t_max
    states = np.empty((n + 1, x.size))
    states[0] = x
    limit = math.inf if overflow is None else overflow
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(n):
            x = step @ x
            peak = np.max(np.abs(x))
            if not peak <= limit or not math.isfinite(peak):
                raise BlowUpError(times[i + 1], i + 1)
            states[i + 1] = x
    return Trajectory(times, states, model, f.n1 * f.n2)


# -- closed forms ----------------------------------------------------------------

def analytic_rotation(s0, omega_z: float, t, model: DynamicsModel = DynamicsModel.NA_QUBIT) -> np.ndarray:
    """Exact solution for a field along z; ``t`` may be an array.

    The non-associative qubit turns clockwise about +z, the standard one
    counter-clockwise.
    """
    s0 = _vec3(s0, "s0")
    if model is DynamicsModel.NA_QUBIT:
        sense = -1.0
    elif model is DynamicsModel.STANDARD:
        sense = 1.0
    else:
        raise ValueError("analytic_rotation covers the standard and na-qubit models")
    t = np.asarray(t, dtype=float)
    c, s = np.cos(omega_z * t), sense * np.sin(omega_z * t)
    sx = s0[0] * c - s0[1] * s
    sy = s0[0] * s + s0[1] * c
    sz = np.full_like(sx, s0[2])
    return np.stack([sx, sy, sz], axis=-1)


def analytic_extended(s0x: float, l0y: float, omega1: float, omega2: float, n1n2: int, t,
                      *, n1: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Exact ``(s_x, l_y)`` for fields along z.

    Solves ``ds_x/dt = n1 w1 l_y``, ``dl_y/dt = n2 w2 s_x``.  With
    ``n1 n2 w1 w2 > 0`` the modes grow/decay at rate ``sqrt(n1 n2 w1 w2)``;
    with ``< 0`` they oscillate at ``sqrt(-n1 n2 w1 w2)``.  The product fixes the
    character of the motion, ``n1`` alone fixes the phase.
    """
    if n1n2 not in (1, -1) or n1 not in (1, -1):
        raise ValueError("n1n2 and n1 must be +1 or -1")
    a = n1 * omega1
    b = n1n2 * n1 * omega2
    t = np.asarray(t, dtype=float)
    lam2 = a * b
    if lam2 > 0:
        r = math.sqrt(lam2)
        ch, sh = np.cosh(r * t), np.sinh(r * t)
        return s0x * ch + (a * l0y / r) * sh, l0y * ch + (b * s0x / r) * sh
    if lam2 < 0:
        w = math.sqrt(-lam2)
        co, si = np.cos(w * t), np.sin(w * t)
        return s0x * co + (a * l0y / w) * si, l0y * co + (b * s0x / w) * si
    return s0x + a * l0y * t, l0y + b * s0x * t


# -- two-level reference system --------------------------------------------

@dataclass(frozen=True)
class QubitSpinor:
    c_plus: complex
    c_minus: complex


def spinor_norm_and_inner(psi: QubitSpinor, phi: QubitSpinor) -> tuple[float, complex]:
    norm2 = abs(psi.c_plus) ** 2 + abs(psi.c_minus) ** 2
    inner = psi.c_plus.conjugate() * phi.c_plus + psi.c_minus.conjugate() * phi.c_minus
    return float(norm2), complex(inner)


PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def pauli_observable(a0: float, a1: float, a2: float, a3: float) -> np.ndarray:
    return 0.5 * np.array([[a0 + a3, a1 - 1j * a2],
                           [a1 + 1j * a2, a0 - a3]], dtype=complex)


def pauli_relations_check():
    """Commutation relations of sigma_i and S_i = sigma_i / 2 over all 9 pairs."""
    col = _Collector("PAULI_RELATIONS")
    spin = [0.5 * p for p in PAULI]
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            si, sj = PAULI[i - 1], PAULI[j - 1]
            got = si @ sj - sj @ si
            want = sum(2j * levi_civita(i, j, k) * PAULI[k - 1] for k in (1, 2, 3))
            got_s = spin[i - 1] @ spin[j - 1] - spin[j - 1] @ spin[i - 1]
            want_s = sum(1j * levi_civita(i, j, k) * spin[k - 1] for k in (1, 2, 3))
            ok = np.array_equal(got, want) and np.array_equal(got_s, want_s)
            col.check(f"[s{i},s{j}]", want.tolist(), got.tolist(), ok)
    return col.report()
