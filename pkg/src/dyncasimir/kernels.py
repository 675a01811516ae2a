r"""Response kernels A+(q, omega; H) and A-(q, omega; H).

Both kernels are

.. math::

    A_\pm = \frac{\pi^2}{64 H^5} \int_{-\infty}^{\infty} W(s)\, g_\pm(s)\, ds,
    \qquad W(s) = \frac{\sin(a s)}{a s},\quad a = \frac{2 Q H}{\pi},

with :math:`Q^2 = q^2 - \omega^2` (``c = 1``). The integrals are defined
by Hadamard finite parts at ``s = 0`` (equivalently, by analytic
continuation in the power of ``s``), which removes the cutoff-dependent
pieces. In that scheme the pure power :math:`4/s^6` of ``g_plus``
integrates to the single-plate kernel,

.. math::

    \frac{\pi^2}{64 H^5}\, \mathrm{FP}\!\int \frac{4 W(s)}{s^6} ds
      = -\frac{Q^5}{360 \pi^2} = A_+^\infty,

so the H-dependence sits in the remainder.

Region I (``Q^2 > 0``): the remainder integrals converge absolutely and
are summed over the zeros of the sinc weight.

Region IIa (``-pi^2/H^2 <= Q^2 < 0``): ``W = sinh(K s)/(K s)`` with
``K = 2 Q' H / pi <= 2``. Only ``h = g - 1/s^6``, which decays like
``exp(-2s)``, is integrated numerically; the remaining pure power
``1/s^6`` continues to a purely imaginary value and the imaginary part is
fixed by causality (``sgn(omega)``) to the single-plate one. The
H-dependent parts are then real.

Region IIb (``K > 2``): the integrals diverge; only a cutoff-regularized
estimate is available (``a_divergence_info``).
"""
import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _series
from .integrands import GKind, SERIES_CUTOFF, _as_kind, _h_direct, _pieces, h_complex
from .quad import QuadResult, integrate, integrate_semi_infinite, residue_numeric, wynn_epsilon

__all__ = [
    "Region",
    "Method",
    "KernelPoint",
    "KernelValue",
    "DivergenceInfo",
    "DivergentRegionError",
    "classify",
    "prefactor",
    "a_plus_single",
    "a_minus_single",
    "a_plus",
    "a_minus",
    "a_pm",
    "a_pm_residue_sum",
    "a_divergence_info",
    "b_constant",
    "remainder_integral",
]

INF = math.inf
_PI = math.pi
_PI2 = _PI * _PI
_BOUNDARY_RTOL = 1e-12


class Region(enum.Enum):
    I = "I"
    IIa = "IIa"
    IIb = "IIb"
    BoundaryLightCone = "BoundaryLightCone"
    BoundaryFirstMode = "BoundaryFirstMode"


class Method(enum.Enum):
    ClosedForm = "ClosedForm"
    SubtractedQuadrature = "SubtractedQuadrature"
    ResidueSum = "ResidueSum"
    Divergent = "Divergent"


@dataclass(frozen=True)
class KernelPoint:
    """Evaluation site (q, omega, H) in natural units (c = 1)."""

    q: float
    omega: float
    H: float = INF

    def __post_init__(self):
        if not (self.q >= 0 and math.isfinite(self.q)):
            raise ValueError("q must be finite and >= 0")
        if not math.isfinite(self.omega):
            raise ValueError("omega must be finite")
        if not self.H > 0:
            raise ValueError("H must be > 0 (or inf)")

    @property
    def Q2(self):
        return self.q * self.q - self.omega * self.omega

    @property
    def region(self):
        return classify(self)

    @property
    def K(self):
        """K = 2 Q' H / pi for Q^2 < 0 (0 otherwise)."""
        if self.Q2 >= 0 or self.H == INF:
            return 0.0
        return 2.0 * math.sqrt(-self.Q2) * self.H / _PI


@dataclass(frozen=True)
class DivergenceInfo:
    K: float
    growth_exponent: float
    Q_prime: float
    H: float
    L: Optional[float] = None
    cutoff_estimate: Optional[complex] = None
    semicircle_magnitude: Optional[float] = None

    def __post_init__(self):
        if not self.K > 2:
            raise ValueError("divergence requires K > 2")


@dataclass(frozen=True)
class KernelValue:
    value: Optional[complex]
    error_estimate: float
    method: Method
    region: Region
    converged: bool = True
    divergence: Optional[DivergenceInfo] = None

    def __post_init__(self):
        if (self.method is Method.Divergent) != (self.region is Region.IIb):
            raise ValueError("Divergent method iff region IIb")
        if self.method is Method.Divergent and self.value is not None:
            raise ValueError("divergent kernels carry no value")


class DivergentRegionError(ArithmeticError):
    """Kernel requested in region IIb; ``info`` carries the divergence data."""

    def __init__(self, info, msg=None):
        self.info = info
        super().__init__(msg or "region IIb: kernel diverges (K = %.6g > 2); "
                         "use a_divergence_info" % info.K)


def classify(p):
    """Region tag for a KernelPoint."""
    Q2 = p.Q2
    scale = max(p.q * p.q, p.omega * p.omega)
    if abs(Q2) <= _BOUNDARY_RTOL * scale:
        return Region.BoundaryLightCone
    if Q2 > 0:
        return Region.I
    if p.H == INF:
        return Region.IIa
    wall = -_PI2 / (p.H * p.H)
    if abs(Q2 - wall) <= _BOUNDARY_RTOL * abs(wall):
        return Region.BoundaryFirstMode
    return Region.IIa if Q2 > wall else Region.IIb


def prefactor(H):
    return _PI2 / (64.0 * H ** 5)


# ---------------------------------------------------------------------------
# single plate

def _a_plus_inf(q, omega):
    Q2 = q * q - omega * omega
    if Q2 > 0:
        return complex(-Q2 ** 2.5 / (360.0 * _PI2), 0.0)
    if Q2 < 0:
        return complex(0.0, math.copysign(1.0, omega) * (-Q2) ** 2.5 / (360.0 * _PI2))
    return 0j


def a_plus_single(q, omega):
    """Single-plate kernel: -Q^5/(360 pi^2), or i sgn(omega) |Q|^5/(360 pi^2)."""
    p = KernelPoint(q, omega)
    return KernelValue(_a_plus_inf(q, omega), 0.0, Method.ClosedForm, classify(p))


def a_minus_single(q=0.0, omega=0.0):
    """Cross kernel of infinitely separated plates: exactly zero."""
    p = KernelPoint(q, omega)
    return KernelValue(0j, 0.0, Method.ClosedForm, classify(p))


# ---------------------------------------------------------------------------
# finite-part integrals over (0, inf) of W(s) F(s)
#
# F is specified by a regular power series (coefficients of s^{2k}, valid
# below SERIES_CUTOFF), a principal part {2j: L} and a direct evaluator
# for s >= SERIES_CUTOFF.

def _w_coef(k):
    return (-1.0) ** k / math.factorial(2 * k + 1)


_NPHI = 30


def _weight_u(u):
    """sinc(sqrt(u)) continued to u < 0."""
    u = np.asarray(u, dtype=float)
    out = np.ones_like(u)
    pos = u > 0
    neg = u < 0
    r = np.sqrt(u[pos])
    out[pos] = np.sin(r) / r
    r = np.sqrt(-u[neg])
    out[neg] = np.sinh(r) / r
    return out


def _phi(j, u):
    """(W(u) - sum_{k<j} w_k u^k) / u^j, stable for all real u."""
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    small = np.abs(u) < 4.0
    if np.any(small):
        x = u[small]
        acc = np.zeros_like(x)
        for k in range(j + _NPHI, j - 1, -1):
            acc = acc * x + _w_coef(k)
        out[small] = acc
    big = ~small
    if np.any(big):
        x = u[big]
        head = sum(_w_coef(k) * x ** k for k in range(j))
        out[big] = (_weight_u(x) - head) / x ** j
    return out


@dataclass(frozen=True)
class _Spec:
    reg: tuple           # coefficients of s^{2k} of F - principal part
    principal: dict      # {2j: coefficient of s^{-2j}}
    far: object          # callable(s) for s >= SERIES_CUTOFF
    far_scaled: object   # callable(s) returning F(s) exp(2s), or None


def _hs_scaled(s, sign):
    # h(s) exp(2s), safe for large s
    e = np.exp(-2.0 * s)
    om = -np.expm1(-2.0 * s)
    cs = 4.0 * (1.0 + e) / om ** 3
    ts = 4.0 * om / (1.0 + e) ** 3
    c = cs * e
    t = ts * e
    s2 = s * s
    r = (s2 - 0.75 * _PI2) / (s2 + 0.25 * _PI2) ** 3
    return sign * 2.0 * cs / s ** 3 + c * cs + t * ts + sign * 2.0 * s * ts * r


_PLUS = tuple(_series.PLUS)
_MINUS = tuple(_series.MINUS)

_SPECS = {
    # g_plus - 4/s^6
    "gsub": _Spec(_PLUS[3:], {2: -4.0 / 15.0},
                  lambda s: _h_direct(s, +1) - 3.0 / s ** 6, None),
    # g_minus (regular)
    "gminus": _Spec(_MINUS[3:], {},
                    lambda s: _h_direct(s, -1) + 1.0 / s ** 6, None),
    # h_plus = g_plus - 1/s^6
    "hplus": _Spec(_PLUS[3:], {6: 3.0, 2: -4.0 / 15.0},
                   lambda s: _h_direct(s, +1), lambda s: _hs_scaled(s, +1)),
    # h_minus = g_minus - 1/s^6
    "hminus": _Spec(_MINUS[3:], {6: -1.0},
                    lambda s: _h_direct(s, -1), lambda s: _hs_scaled(s, -1)),
}


def _poly(coef, x2):
    out = np.zeros_like(x2)
    for c in coef[::-1]:
        out = out * x2 + c
    return out


def _fp_half_line(spec, x2, rel_tol, abs_tol, upper=None):
    """FP of int_0^upper W(s) F(s) ds (upper = inf by default).

    Returns (value, error, evaluations, converged).
    """
    sm = SERIES_CUTOFF
    # constant terms from the finite parts of the pure powers
    const = 0.0
    for p, L in spec.principal.items():
        j = p // 2
        for k in range(j):
            const += L * _w_coef(k) * x2 ** k * sm ** (2 * k - p + 1) / (2 * k - p + 1)

    def near(s):
        s = np.asarray(s, dtype=float)
        val = _weight_u(x2 * s * s) * _poly(np.asarray(spec.reg), s * s)
        for p, L in spec.principal.items():
            val = val + L * x2 ** (p // 2) * _phi(p // 2, x2 * s * s)
        return val

    r1 = integrate(near, 0.0, sm, rel_tol=0.1 * rel_tol, abs_tol=0.1 * abs_tol)

    if upper is not None:
        r2 = integrate(lambda s: _weight_u(x2 * s * s) * spec.far(s), sm, upper,
                       rel_tol=0.1 * rel_tol, abs_tol=0.1 * abs_tol, max_intervals=20000)
    elif x2 > 0:
        a = math.sqrt(x2)

        def far(s):
            return np.sinc(a * s / _PI) * spec.far(s)

        r2 = integrate_semi_infinite(far, sm, 0.5, rel_tol=0.1 * rel_tol,
                                     abs_tol=0.1 * abs_tol, half_period=_PI / a)
    else:
        K = math.sqrt(-x2)

        def far(s):
            s = np.asarray(s, dtype=float)
            if K == 0.0:
                return spec.far(s)
            out = np.empty_like(s)
            lo = s < 20.0
            if np.any(lo):
                x = s[lo]
                out[lo] = np.sinh(K * x) / (K * x) * spec.far(x)
            hi = ~lo
            if np.any(hi):
                x = s[hi]
                if spec.far_scaled is None:
                    raise ArithmeticError("integrand not continued into IIa")
                w = (np.exp((K - 2.0) * x) - np.exp(-(K + 2.0) * x)) / (2.0 * K * x)
                out[hi] = w * spec.far_scaled(x)
            return out

        scale = 0.5 if K == 0 else min(20.0, max(0.5, 1.0 / max(2.0 - K, 1e-9)))
        r2 = integrate_semi_infinite(far, sm, scale, rel_tol=0.1 * rel_tol,
                                     abs_tol=0.1 * abs_tol)
    value = const + r1.value + r2.value
    err = r1.abs_error_estimate + r2.abs_error_estimate + 1e-15 * abs(const)
    return (float(np.real(value)), err, r1.evaluations + r2.evaluations,
            r1.converged and r2.converged)


def remainder_integral(name, x2, rel_tol=1e-10, abs_tol=1e-13):
    """Full-line finite-part integral of W(s) F(s) for a named integrand.

    ``name`` is one of ``gsub`` (g_plus - 4/s^6), ``gminus``, ``hplus``,
    ``hminus``; ``x2 = Q^2 (2H/pi)^2`` is the signed squared weight scale.
    Returns a :class:`QuadResult`.
    """
    spec = _SPECS[name]
    if x2 < 0 and spec.far_scaled is None:
        raise ValueError("%s diverges against the sinh weight" % name)
    v, e, n, ok = _fp_half_line(spec, x2, rel_tol, abs_tol)
    return QuadResult(2.0 * v, 2.0 * e, n, ok)


def _power6(x2):
    """Finite-part integral over the real line of W(s)/s^6: -pi a^5/720."""
    if x2 >= 0:
        return complex(-_PI * x2 ** 2.5 / 720.0, 0.0)
    return complex(0.0, -_PI * (-x2) ** 2.5 / 720.0)


def b_constant(rel_tol=1e-12):
    """B = int_0^inf s^2 (g_plus(s) - 4/s^6) ds by semi-infinite quadrature."""
    from .integrands import g_plus_subtracted
    return integrate_semi_infinite(lambda s: s * s * g_plus_subtracted(s), 0.0, 0.5,
                                   rel_tol=rel_tol, abs_tol=1e-15)


# ---------------------------------------------------------------------------
# kernels

def _check_point(p):
    reg = classify(p)
    if reg is Region.IIb:
        raise DivergentRegionError(_divergence(p))
    return reg


def a_pm(p, kind, rel_tol=1e-10):
    """A+ or A- at a KernelPoint by subtracted finite-part quadrature."""
    kind = _as_kind(kind)
    reg = _check_point(p)
    if p.H == INF:
        if kind is GKind.PLUS:
            return a_plus_single(p.q, p.omega)
        return KernelValue(0j, 0.0, Method.ClosedForm, reg)
    x2 = p.Q2 * (2.0 * p.H / _PI) ** 2
    pref = prefactor(p.H)
    single = _a_plus_inf(p.q, p.omega)
    scale = pref * max(1.0, abs(x2) ** 2.5)
    abs_tol = max(1e-300, 1e-3 * rel_tol * scale / pref)
    if x2 >= 0:
        name = "gsub" if kind is GKind.PLUS else "gminus"
    else:
        name = "hplus" if kind is GKind.PLUS else "hminus"
    r = remainder_integral(name, x2, rel_tol=rel_tol, abs_tol=abs_tol)
    rem = pref * r.value
    if kind is GKind.PLUS:
        value = single + rem
    else:
        value = complex(rem, 0.0)
    return KernelValue(value, pref * r.abs_error_estimate, Method.SubtractedQuadrature,
                       reg, converged=r.converged)


def a_plus(p, rel_tol=1e-10):
    return a_pm(p, GKind.PLUS, rel_tol)


def a_minus(p, rel_tol=1e-10):
    return a_pm(p, GKind.MINUS, rel_tol)


# ---------------------------------------------------------------------------
# residue summation

_RES_RADIUS = 0.6


def _h_residue_term(kind, lam, z0, order, radius):
    f = lambda z: np.exp(lam * (z - z0)) * h_complex(z, kind) / z
    return np.exp(lam * z0) * residue_numeric(f, z0, order, radius)


def _h_line_integral_residues(kind, lam, max_poles, rel_tol):
    """FP int_R e^{lam s} h(s)/s ds via residues in the upper half plane.

    Returns (value, error, terms, converged).
    """
    r = min(_RES_RADIUS, 3.0 / abs(lam))
    res0 = _h_residue_term(kind, lam, 0.0, 7, r)
    total = 1j * _PI * res0
    sums = []
    terms = []
    # poles at i n pi/2; pair the cosh pole (n odd) with the sinh pole (n+1)
    for m in range(max_poles):
        cell = 0j
        for n in (2 * m + 1, 2 * m + 2):
            cell += _h_residue_term(kind, lam, 1j * n * _PI / 2.0, 6, r)
        term = 2j * _PI * cell
        total = total + term
        terms.append(term)
        sums.append(total)
        if m >= 3:
            mag = abs(term)
            if mag <= 1e-3 * rel_tol * abs(total):
                return total, mag, terms, True
            est, spread = wynn_epsilon(sums[-30:])
            if len(sums) > 12 and spread <= 0.1 * rel_tol * abs(est):
                return est, spread, terms, True
    est, spread = wynn_epsilon(sums[-30:])
    return est, spread, terms, False


def a_pm_residue_sum(p, kind, max_poles=400, rel_tol=1e-9, return_terms=False):
    """A+ or A- by closing the contour and summing numerical residues.

    Valid in regions I and IIa (not on the light cone, where the weight
    has no exponential representation). The weight is written as
    ``(e^{lam s} - e^{-lam s})/(2 lam s)`` with ``lam = i a`` (region I)
    or ``lam = K`` (region IIa); the finite-part line integral of
    ``e^{lam s} h(s)/s`` equals ``2 pi i`` times the upper-half-plane
    residues plus ``pi i`` times the residue at the origin.
    """
    kind = _as_kind(kind)
    reg = _check_point(p)
    if p.H == INF or reg is Region.BoundaryLightCone:
        raise ValueError("residue summation needs finite H and Q^2 != 0")
    x2 = p.Q2 * (2.0 * p.H / _PI) ** 2
    lam = 1j * math.sqrt(x2) if x2 > 0 else complex(math.sqrt(-x2))
    val, err, terms, ok = _h_line_integral_residues(kind, lam, max_poles, rel_tol)
    J = val / lam
    # finite-part integral of W h over the real line is real
    Jh = J.real
    pref = prefactor(p.H)
    single = _a_plus_inf(p.q, p.omega)
    if x2 > 0:
        # h = g - 1/s^6 and the 1/s^6 piece integrates to _power6
        value = complex(pref * (Jh + _power6(x2).real), 0.0)
    else:
        rem = pref * Jh
        value = single + rem if kind is GKind.PLUS else complex(rem, 0.0)
    err_total = pref * (abs(err / lam) + abs(J.imag))
    kv = KernelValue(value, err_total, Method.ResidueSum, reg, converged=ok)
    if return_terms:
        return kv, terms
    return kv


# ---------------------------------------------------------------------------
# region IIb

def _divergence(p, L=None):
    Qp = math.sqrt(-p.Q2)
    K = 2.0 * Qp * p.H / _PI
    return DivergenceInfo(K=K, growth_exponent=(K - 2.0) / p.H, Q_prime=Qp, H=p.H, L=L)


def a_divergence_info(p, L, kind=GKind.PLUS, rel_tol=1e-10):
    """Divergence data for a region IIb point with spatial cutoff L.

    ``cutoff_estimate`` is the kernel with the s-integral of the decaying
    part truncated at ``s = L/H`` (real part) plus the single-plate
    imaginary part; ``semicircle_magnitude`` is the contour estimate
    ``exp[(K-2)L/H] / (K (L/H)^3)`` of the contribution that the cutoff
    hides. Both grow without bound as L -> inf.
    """
    kind = _as_kind(kind)
    if classify(p) is not Region.IIb:
        raise ValueError("a_divergence_info requires a region IIb point")
    if not L > p.H:
        raise ValueError("cutoff L must exceed H")
    info = _divergence(p)
    S = L / p.H
    x2 = p.Q2 * (2.0 * p.H / _PI) ** 2
    spec = _SPECS["hplus" if kind is GKind.PLUS else "hminus"]
    v, e, n, ok = _fp_half_line(spec, x2, rel_tol, 1e-14, upper=S)
    pref = prefactor(p.H)
    rem = 2.0 * pref * v
    est = complex(rem, 0.0)
    if kind is GKind.PLUS:
        est += _a_plus_inf(p.q, p.omega)
    K = info.K
    semi = math.exp((K - 2.0) * S) / (K * S ** 3)
    return DivergenceInfo(K=K, growth_exponent=info.growth_exponent, Q_prime=info.Q_prime,
                          H=p.H, L=L, cutoff_estimate=est, semicircle_magnitude=semi)
