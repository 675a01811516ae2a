r"""Mechanical response of laterally moving corrugated plates.

Plate 1 is displaced in its own plane by ``r(t)``; plate 2 (optional) is
fixed. The lateral force is ``f_i(omega) = chi_ij(omega) r_j(omega) +
f0_i(omega)`` with

.. math::

    \chi_{ij}(\omega) = \hbar c \int \frac{d^2 q}{(2\pi)^2} q_i q_j
      \Big\{[A_+(q,\omega) - A_+(q,0)]\,|h_1(q)|^2
      + \tfrac12 A_-(q,0)\,[h_1(q) h_2(-q) + h_1(-q) h_2(q)]\Big\}.

For cosine profiles ``h(x) = d cos(k.x + phase)`` the q-integral
collapses onto ``q = +-k``; with plate area ``A`` this gives

.. math::

    \chi_\parallel = \hbar c\,\frac{A d_1^2}{2} k^2 [A_+(k,\omega) - A_+(k,0)]
      + \hbar c\,\frac{A d_1 d_2}{2} k^2 A_-(k,0) \cos\Delta,

and all components perpendicular to ``k`` vanish.

Everything here works in natural units (hbar = c = 1, lengths in m).
Plain floats are taken to be natural-unit values; Quantity arguments are
converted. Observables are returned as natural-unit Quantity objects
carrying their SI dimension, ready for ``units.from_natural``.

Sign conventions: time dependence ``exp(-i omega t)``, so a force
``f = chi r`` with ``chi = dm omega^2`` is an inertial reaction and
``chi = i omega eta`` with ``eta > 0`` is friction. With the causal
single-plate kernel (imaginary part ``+ sgn(omega)``) the dissipative
part of chi therefore has ``Im chi > 0`` for ``omega > 0``; the viscosity
is ``eta = Im chi / omega``.
"""
import functools
import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from . import kernels as _k
from .kernels import KernelPoint, Region, classify
from .units import (FORCE, LENGTH, MASS, POWER, VISCOSITY, AREA, WAVENUMBER,
                    Mode, Quantity, SI, to_natural)

__all__ = [
    "CorrugatedPlate",
    "Static",
    "Uniform",
    "Oscillatory",
    "CavityScenario",
    "ResponseTensor",
    "MassTensor",
    "DivergentResponseError",
    "chi",
    "mass_single",
    "viscosity_single",
    "mass_double",
    "mass_double_fd",
    "dissipation_rate",
    "josephson_dc",
    "josephson_ac",
    "josephson_ac_frequency",
    "static_lateral_force",
    "kernel_omega2_coefficient",
    "b_value",
]

INF = math.inf
_PI2 = math.pi ** 2


def _nat(x, dim):
    """Natural-unit float from a float or a Quantity of dimension ``dim``."""
    if isinstance(x, Quantity):
        if x.dim != dim:
            raise TypeError("expected dimension %s, got %s" % (dim, x.dim))
        x = to_natural(x, SI).value
    return x


def _nat_vec(x, dim):
    if isinstance(x, Quantity):
        x = _nat(x, dim)
    v = np.asarray(x, dtype=float)
    if v.shape != (2,):
        raise ValueError("expected an in-plane 2-vector")
    return v


def _q(value, dim):
    return Quantity(value, dim, Mode.Natural)


# ---------------------------------------------------------------------------
# scenario types

@dataclass(frozen=True)
class CorrugatedPlate:
    """Uniaxial corrugation ``h(x) = d cos(k.x + phase)``."""

    d: float
    k: tuple
    phase: float = 0.0

    def __post_init__(self):
        d = _nat(self.d, LENGTH)
        k = tuple(float(c) for c in _nat_vec(self.k, WAVENUMBER))
        object.__setattr__(self, "d", float(d))
        object.__setattr__(self, "k", k)
        if not self.d >= 0:
            raise ValueError("corrugation amplitude must be >= 0")
        if not np.hypot(*k) > 0:
            raise ValueError("corrugation wavevector must be nonzero")

    @property
    def kvec(self):
        return np.array(self.k)

    @property
    def kmag(self):
        return float(np.hypot(*self.k))

    @property
    def khat(self):
        return self.kvec / self.kmag

    def fourier_lines(self):
        """[(q, c_q)] with h(x) = sum c_q exp(i q.x)."""
        c = 0.5 * self.d * np.exp(1j * self.phase)
        return [(self.kvec, c), (-self.kvec, np.conj(c))]


@dataclass(frozen=True)
class Static:
    offset: tuple = (0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "offset", tuple(_nat_vec(self.offset, LENGTH)))


@dataclass(frozen=True)
class Uniform:
    v: tuple

    def __post_init__(self):
        v = _nat_vec(self.v, (1, -1, 0))
        if np.hypot(*v) >= 1.0:
            raise ValueError("sliding speed must be below c")
        object.__setattr__(self, "v", tuple(v))


@dataclass(frozen=True)
class Oscillatory:
    amplitude: tuple
    omega: float

    def __post_init__(self):
        object.__setattr__(self, "amplitude", tuple(_nat_vec(self.amplitude, LENGTH)))
        object.__setattr__(self, "omega", float(_nat(self.omega, (0, -1, 0))))


@dataclass(frozen=True)
class CavityScenario:
    plate1: CorrugatedPlate
    plate2: Optional[CorrugatedPlate] = None
    H: float = INF
    area: float = 1.0
    motion: Union[Static, Uniform, Oscillatory] = field(default_factory=Static)

    def __post_init__(self):
        H = float(_nat(self.H, LENGTH))
        A = float(_nat(self.area, AREA))
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "area", A)
        if self.plate2 is None and H != INF:
            raise ValueError("a single plate requires H = inf")
        if self.plate2 is not None and not (0 < H < INF):
            raise ValueError("two plates require a finite separation H > 0")
        if not A > 0:
            raise ValueError("area must be positive")

    @property
    def matched(self):
        """True when the corrugations have equal |k| and parallel k."""
        if self.plate2 is None:
            return False
        k1, k2 = self.plate1.kvec, self.plate2.kvec
        cross = k1[0] * k2[1] - k1[1] * k2[0]
        scale = self.plate1.kmag * self.plate2.kmag
        return (abs(cross) <= 1e-12 * scale
                and abs(self.plate1.kmag - self.plate2.kmag) <= 1e-12 * self.plate1.kmag)

    def relative_phase(self):
        """Delta = phase1 - k.r0 - phase2' for matched plates.

        ``phase2'`` accounts for an antiparallel k2 (cos is even).
        """
        p2 = self.plate2
        phi2 = p2.phase if np.dot(self.plate1.kvec, p2.kvec) > 0 else -p2.phase
        r0 = np.array(self.motion.offset) if isinstance(self.motion, Static) else np.zeros(2)
        return self.plate1.phase - float(np.dot(self.plate1.kvec, r0)) - phi2


def _require_matched(sc):
    if sc.plate2 is None:
        raise ValueError("Josephson forces need two plates")
    if not sc.matched:
        raise ValueError("Josephson forces need |k1| = |k2| with k1 parallel to k2")


class DivergentResponseError(ArithmeticError):
    """Linear response requested at a region IIb frequency.

    Such a response cannot be generated by any finite external force;
    ``info`` is the kernels' DivergenceInfo.
    """

    def __init__(self, info, omega):
        self.info = info
        self.omega = omega
        super().__init__("omega = %g lies in region IIb (K = %.6g > 2)" % (omega, info.K))


# ---------------------------------------------------------------------------
# tensors

@dataclass(frozen=True)
class ResponseTensor:
    """2x2 response tensor in the (parallel, perpendicular) basis of k."""

    components: np.ndarray
    khat: np.ndarray
    error_estimate: float = 0.0

    @property
    def parallel(self):
        return complex(self.components[0, 0])

    @property
    def perpendicular(self):
        return complex(self.components[1, 1])

    def lab(self):
        """Components in the laboratory (x, y) frame."""
        e1 = self.khat
        e2 = np.array([-e1[1], e1[0]])
        R = np.column_stack([e1, e2])
        return R @ self.components @ R.T


@dataclass(frozen=True)
class MassTensor:
    """Parallel/perpendicular components of a mass or viscosity tensor."""

    parallel: Quantity
    perpendicular: Quantity

    def apply(self, vec_parallel_perp):
        v = np.asarray(vec_parallel_perp, dtype=float)
        return np.array([self.parallel.value * v[0], self.perpendicular.value * v[1]])


def _tensor(par, khat, err=0.0):
    m = np.zeros((2, 2), dtype=complex)
    m[0, 0] = par
    return ResponseTensor(m, np.asarray(khat, dtype=float), err)


@functools.lru_cache(maxsize=4096)
def _a_plus_cached(k, omega, H, rel_tol):
    return _k.a_plus(KernelPoint(k, omega, H), rel_tol)


@functools.lru_cache(maxsize=4096)
def _a_minus_cached(k, H, rel_tol):
    return _k.a_minus(KernelPoint(k, 0.0, H), rel_tol)


def _kernel_plus(k, omega, H, rel_tol):
    p = KernelPoint(k, abs(omega), H)
    if classify(p) is Region.IIb:
        raise DivergentResponseError(_k._divergence(p), omega)
    kv = _a_plus_cached(k, abs(omega), H, rel_tol)
    val = kv.value
    if omega < 0:
        val = val.conjugate()
    return val, kv.error_estimate


def chi(omega, scenario, rel_tol=1e-10):
    """Response tensor chi(omega) of a cosine corrugation (natural units).

    Negative omega gives the complex conjugate (real trajectories).
    Raises DivergentResponseError for region IIb frequencies.
    """
    omega = float(_nat(omega, (0, -1, 0)))
    sc = scenario
    p1 = sc.plate1
    k = p1.kmag
    A = sc.area
    a0, e0 = _kernel_plus(k, 0.0, sc.H, rel_tol)
    aw, ew = _kernel_plus(k, omega, sc.H, rel_tol)
    par = 0.5 * A * p1.d ** 2 * k * k * (aw - a0)
    err = 0.5 * A * p1.d ** 2 * k * k * (e0 + ew)
    if sc.plate2 is not None and sc.matched:
        am = _a_minus_cached(k, sc.H, rel_tol)
        cross = 0.5 * A * p1.d * sc.plate2.d * k * k * am.value.real * math.cos(sc.relative_phase())
        par += cross
        err += abs(0.5 * A * p1.d * sc.plate2.d * k * k) * am.error_estimate
    return _tensor(par, p1.khat, err)


# ---------------------------------------------------------------------------
# closed forms

def mass_single(plate, area):
    """dm_par = A k^5 d^2 / (288 pi^2) (natural units), dm_perp = 0."""
    A = float(_nat(area, AREA))
    k = plate.kmag
    par = A * k ** 5 * plate.d ** 2 / (288.0 * _PI2)
    return MassTensor(_q(par, MASS), _q(0.0, MASS))


def viscosity_single(plate, area, omega, exact=False):
    """eta_par = A k^2 d^2 omega^4 / (720 pi^2) for omega >> k; eta_perp = 0.

    The omega^4 law is the high-frequency limit. ``exact=True`` returns
    Im chi / omega from the single-plate kernel instead,
    A k^2 d^2 (omega^2 - k^2)^(5/2) / (720 pi^2 omega).
    """
    A = float(_nat(area, AREA))
    w = float(_nat(omega, (0, -1, 0)))
    k = plate.kmag
    if not w > k:
        raise ValueError("viscosity defined for omega > c k")
    if exact:
        par = A * k * k * plate.d ** 2 * (w * w - k * k) ** 2.5 / (720.0 * _PI2 * w)
    else:
        par = A * k * k * plate.d ** 2 * w ** 4 / (720.0 * _PI2)
    return MassTensor(_q(par, VISCOSITY), _q(0.0, VISCOSITY))


@functools.lru_cache(maxsize=1)
def b_value():
    """B = int_0^inf s^2 [g_plus(s) - 4/s^6] ds (cached; shared constant)."""
    return float(_k.b_constant().value)


def mass_double(plate, area, H, B=None):
    """Small-kH mass correction of a plate facing a flat plate.

    The kernel's omega^2 coefficient at small kH is B/(48 H^3); inserted
    into chi (factor A d^2 k^2 / 2) it gives dm_par = A B k^2 d^2/(96 H^3).
    """
    A = float(_nat(area, AREA))
    H = float(_nat(H, LENGTH))
    B = b_value() if B is None else B
    k = plate.kmag
    par = A * B * k * k * plate.d ** 2 / (96.0 * H ** 3)
    return MassTensor(_q(par, MASS), _q(0.0, MASS))


def kernel_omega2_coefficient(k, H, rel_tol=1e-13, step=None):
    """d A+(k, omega; H) / d(omega^2) at omega = 0 by Richardson differences.

    Uses [A+(k, w) - A+(k, 0)] / w^2 at w = h and h/2, combined to cancel
    the O(w^2) error. Returns (value, error_estimate).
    """
    h0 = step if step is not None else 0.25 * min(k, math.pi / H)
    a0 = _k.a_plus(KernelPoint(k, 0.0, H), rel_tol)
    vals = []
    errs = []
    for h in (h0, 0.5 * h0, 0.25 * h0):
        ah = _k.a_plus(KernelPoint(k, h, H), rel_tol)
        vals.append((ah.value.real - a0.value.real) / (h * h))
        errs.append((ah.error_estimate + a0.error_estimate) / (h * h))
    r1 = (4.0 * vals[1] - vals[0]) / 3.0
    r2 = (4.0 * vals[2] - vals[1]) / 3.0
    return r2, abs(r2 - r1) + errs[2]


def mass_double_fd(plate, area, H, rel_tol=1e-13):
    """General-kH mass correction from finite differences of the kernel."""
    A = float(_nat(area, AREA))
    H = float(_nat(H, LENGTH))
    k = plate.kmag
    c, err = kernel_omega2_coefficient(k, H, rel_tol)
    fac = 0.5 * A * plate.d ** 2 * k * k
    return MassTensor(_q(fac * c, MASS), _q(0.0, MASS)), fac * err


# ---------------------------------------------------------------------------
# dissipation and forces

def dissipation_rate(spectrum, scenario, rel_tol=1e-10):
    """Time-averaged power dissipated by the vacuum friction force.

    ``spectrum`` maps omega to the complex lab-frame 2-vector ``r_omega``
    of ``r(t) = sum_omega r_omega exp(-i omega t)``; it must be conjugate
    symmetric (``r_{-omega} = conj(r_omega)``). The result

        D = sum_{omega > 0} 2 omega r_omega^H Im[chi(omega)] r_omega >= 0

    is minus the mean power <r' . f> delivered by the force.
    """
    items = {float(_nat(w, (0, -1, 0))): np.asarray(r, dtype=complex) for w, r in spectrum.items()}
    for w, r in items.items():
        if r.shape != (2,):
            raise ValueError("spectrum entries must be 2-vectors")
        if w != 0.0:
            partner = items.get(-w)
            if partner is None or not np.allclose(partner, np.conj(r), rtol=1e-12, atol=0):
                raise ValueError("spectrum is not conjugate symmetric at omega = %g" % w)
        elif np.any(np.abs(r.imag) > 0):
            raise ValueError("static component must be real")
    total = 0.0
    for w, r in sorted(items.items()):
        if w <= 0.0 or not np.any(r):
            continue
        t = chi(w, scenario, rel_tol)
        im = t.lab().imag
        total += 2.0 * w * float(np.real(np.conj(r) @ im @ r))
    return _q(total, POWER)


def _amp_minus(sc, rel_tol):
    return _a_minus_cached(sc.plate1.kmag, sc.H, rel_tol).value.real


def josephson_dc(scenario, rel_tol=1e-10):
    """Static lateral force F = (A/2) A-(k,0) d1 d2 sin(alpha) k (natural units).

    ``alpha = k.r0`` for in-phase profiles; general phases enter through
    ``alpha = -Delta`` with Delta from CavityScenario.relative_phase.
    """
    sc = scenario
    _require_matched(sc)
    if not isinstance(sc.motion, Static):
        raise ValueError("josephson_dc needs a Static motion")
    alpha = -sc.relative_phase()
    amp = 0.5 * sc.area * _amp_minus(sc, rel_tol) * sc.plate1.d * sc.plate2.d
    return _q(amp * math.sin(alpha) * sc.plate1.kvec, FORCE)


def josephson_ac_frequency(scenario):
    """Angular frequency k.v of the sliding force (natural units, 1/m)."""
    sc = scenario
    if not isinstance(sc.motion, Uniform):
        raise ValueError("needs a Uniform motion")
    return float(np.dot(sc.plate1.kvec, np.array(sc.motion.v)))


def josephson_ac(scenario, t, rel_tol=1e-10):
    """F(t) = (A/2) A-(k,0) d1 d2 sin[(k.v) t + alpha0] k for uniform sliding.

    ``t`` is in natural units (c t, meters); arrays give a (len(t), 2) array.
    """
    sc = scenario
    _require_matched(sc)
    if not isinstance(sc.motion, Uniform):
        raise ValueError("josephson_ac needs a Uniform motion")
    t = np.asarray(_nat(t, (0, 1, 0)), dtype=float)
    alpha0 = -(sc.plate1.phase - (sc.plate2.phase if np.dot(sc.plate1.kvec, sc.plate2.kvec) > 0
                                  else -sc.plate2.phase))
    w = josephson_ac_frequency(sc)
    amp = 0.5 * sc.area * _amp_minus(sc, rel_tol) * sc.plate1.d * sc.plate2.d
    s = np.sin(w * t + alpha0)
    return _q(amp * np.multiply.outer(s, sc.plate1.kvec), FORCE)


def static_lateral_force(scenario, rel_tol=1e-10):
    """Residual static force from a sum over Fourier lines of the profiles.

    With ``h(x) = sum_q c_q exp(i q.x)`` for both plates and plate 1 shifted
    by r0, the omega = 0 weight of the residual force is

        f = A sum_q i q A-(|q|, 0) c1_q c2_{-q} exp(-i q.r0).

    This is an independent route to the Josephson DC force.
    """
    sc = scenario
    if sc.plate2 is None:
        return _q(np.zeros(2), FORCE)
    r0 = np.array(sc.motion.offset) if isinstance(sc.motion, Static) else np.zeros(2)
    total = np.zeros(2, dtype=complex)
    for q1, c1 in sc.plate1.fourier_lines():
        for q2, c2 in sc.plate2.fourier_lines():
            if np.allclose(q2, -q1, rtol=1e-12, atol=1e-12 * np.hypot(*q1)):
                am = _a_minus_cached(float(np.hypot(*q1)), sc.H, rel_tol).value.real
                total += 1j * q1 * am * c1 * c2 * np.exp(-1j * np.dot(q1, r0))
    total *= sc.area
    return _q(total.real, FORCE)
