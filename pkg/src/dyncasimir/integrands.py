r"""Dimensionless integrands of the response kernels.

The kernels are built from two even functions of the dimensionless
variable :math:`s`,

.. math::

    g_\pm(s) = \left(\frac{1}{s^3} \pm \frac{\cosh s}{\sinh^3 s}\right)^2
        + \frac{\sinh^2 s}{\cosh^6 s}
        \pm 2 s\,\frac{\sinh s}{\cosh^3 s}\,
        \frac{s^2 - 3\pi^2/4}{(s^2 + \pi^2/4)^3},

and the generalized sinc weight that carries the dependence on
:math:`Q^2 = q^2 - \omega^2`.

Near ``s = 0`` the direct formula suffers from cancellation (``g_minus``)
or overflow (``g_plus``); below ``SERIES_CUTOFF`` a stored power series
of :math:`s^6 g_\pm` is used instead (see ``scripts/gen_series.py``).

Besides ``g`` itself, the kernels need the exponentially decaying part

.. math:: h_\pm(s) = g_\pm(s) - 1/s^6,

together with its Laurent principal part at the origin,
``h_plus ~ 3/s^6 - (4/15)/s^2`` and ``h_minus ~ -1/s^6``.
"""
import enum

import numpy as np

from . import _series

__all__ = [
    "GKind",
    "PoleError",
    "SERIES_CUTOFF",
    "g",
    "g_plus",
    "g_minus",
    "g_plus_subtracted",
    "g_complex",
    "h",
    "h_regular",
    "h_complex",
    "principal_part",
    "sinc_weight",
    "weight_x2",
]

SERIES_CUTOFF = 0.4

_PI2 = np.pi ** 2


class GKind(enum.Enum):
    PLUS = +1
    MINUS = -1

    @property
    def sign(self):
        return self.value


class PoleError(ZeroDivisionError):
    """Raised when ``g_plus`` is requested at its pole ``s = 0``."""


_COEF = {
    GKind.PLUS: np.array(_series.PLUS),
    GKind.MINUS: np.array(_series.MINUS),
}

# Laurent principal part of h = g - 1/s**6 : {power: coefficient}
_PRINCIPAL = {
    GKind.PLUS: {6: 3.0, 4: 0.0, 2: -4.0 / 15.0},
    GKind.MINUS: {6: -1.0, 4: 0.0, 2: 0.0},
}


def _as_kind(kind):
    if isinstance(kind, GKind):
        return kind
    if kind in ("+", "plus", "PLUS", 1, +1):
        return GKind.PLUS
    if kind in ("-", "minus", "MINUS", -1):
        return GKind.MINUS
    raise ValueError("unknown kernel kind %r" % (kind,))


def principal_part(kind):
    """Coefficients ``{2p: c}`` of the singular part ``sum c / s**(2p)`` of h."""
    return dict(_PRINCIPAL[_as_kind(kind)])


def _poly_s2(coef, x2):
    # Horner in s**2
    out = np.zeros_like(x2)
    for c in coef[::-1]:
        out = out * x2 + c
    return out


def _pieces(s):
    """c = cosh/sinh^3, t = sinh/cosh^3 and the rational factor, for s > 0.

    Written in terms of exp(-2s) so that large s neither overflows nor
    loses the exponentially small terms.
    """
    e = np.exp(-2.0 * s)
    om = -np.expm1(-2.0 * s)          # 1 - e^{-2s}
    c = 4.0 * e * (1.0 + e) / om ** 3
    t = 4.0 * e * om / (1.0 + e) ** 3
    s2 = s * s
    r = (s2 - 0.75 * _PI2) / (s2 + 0.25 * _PI2) ** 3
    return c, t, r


def _h_direct(s, sign):
    # h = g - 1/s^6 with the (1/s^3)^2 term removed analytically
    c, t, r = _pieces(s)
    return sign * 2.0 * c / s ** 3 + c * c + t * t + sign * 2.0 * s * t * r


def h(s, kind):
    """Decaying part ``g(s) - 1/s**6`` (singular at 0 for both kinds)."""
    kind = _as_kind(kind)
    s = np.abs(np.asarray(s, dtype=float))
    out = np.empty_like(s)
    small = s < SERIES_CUTOFF
    if np.any(small):
        x = s[small]
        with np.errstate(divide="ignore"):
            out[small] = (_poly_s2(_COEF[kind], x * x) - 1.0) / x ** 6
    big = ~small
    if np.any(big):
        out[big] = _h_direct(s[big], kind.sign)
    return out[()] if out.ndim == 0 else out


def h_regular(s, kind):
    """``h`` minus its Laurent principal part; smooth and even at s = 0."""
    kind = _as_kind(kind)
    s = np.abs(np.asarray(s, dtype=float))
    out = np.empty_like(s)
    small = s < SERIES_CUTOFF
    if np.any(small):
        x2 = s[small] ** 2
        out[small] = _poly_s2(_COEF[kind][3:], x2)
    big = ~small
    if np.any(big):
        x = s[big]
        sing = sum(cf / x ** p for p, cf in _PRINCIPAL[kind].items())
        out[big] = _h_direct(x, kind.sign) - sing
    return out[()] if out.ndim == 0 else out


def g(s, kind):
    """Evaluate ``g_plus`` or ``g_minus`` (vectorized, even in s)."""
    kind = _as_kind(kind)
    s = np.abs(np.asarray(s, dtype=float))
    if kind is GKind.PLUS and np.any(s == 0.0):
        raise PoleError("g_plus has a pole at s = 0")
    out = np.empty_like(s)
    small = s < SERIES_CUTOFF
    if np.any(small):
        x = s[small]
        if kind is GKind.MINUS:
            # s^6 g_minus starts at s^8
            out[small] = _poly_s2(_COEF[kind][4:], x * x) * x * x
        else:
            out[small] = _poly_s2(_COEF[kind], x * x) / x ** 6
    big = ~small
    if np.any(big):
        x = s[big]
        out[big] = _h_direct(x, kind.sign) + 1.0 / x ** 6
    return out[()] if out.ndim == 0 else out


def g_plus(s):
    return g(s, GKind.PLUS)


def g_minus(s):
    return g(s, GKind.MINUS)


def g_plus_subtracted(s):
    """``g_plus(s) - 4/s**6``, cancellation-free near the origin.

    For large s this approaches ``-3/s**6`` (the 1/s^6 tail of g_plus is
    1, not 4), so the subtracted function decays algebraically.
    """
    s = np.abs(np.asarray(s, dtype=float))
    out = np.empty_like(s)
    small = s < SERIES_CUTOFF
    if np.any(small):
        x = s[small]
        out[small] = _poly_s2(_COEF[GKind.PLUS][2:], x * x) / x ** 2
    big = ~small
    if np.any(big):
        x = s[big]
        out[big] = _h_direct(x, +1) - 3.0 / x ** 6
    return out[()] if out.ndim == 0 else out


def g_complex(z, kind):
    """Direct formula at complex argument (used for contour residues)."""
    kind = _as_kind(kind)
    z = np.asarray(z, dtype=complex)
    sg = kind.sign
    c = np.cosh(z) / np.sinh(z) ** 3
    t = np.sinh(z) / np.cosh(z) ** 3
    r = (z * z - 0.75 * _PI2) / (z * z + 0.25 * _PI2) ** 3
    return (1.0 / z ** 3 + sg * c) ** 2 + t * t + sg * 2.0 * z * t * r


def h_complex(z, kind):
    z = np.asarray(z, dtype=complex)
    return g_complex(z, kind) - 1.0 / z ** 6


def weight_x2(Q2, H):
    """Signed squared scale ``x2`` of the weight: W(s) = sinc(sqrt(x2) s)."""
    return float(Q2) * (2.0 * H / np.pi) ** 2


def _weight(x2, s):
    s = np.asarray(s, dtype=float)
    if x2 > 0:
        return np.sinc(np.sqrt(x2) * s / np.pi)
    if x2 < 0:
        x = np.sqrt(-x2) * s
        with np.errstate(invalid="ignore"):
            out = np.where(x == 0.0, 1.0, np.sinh(x) / np.where(x == 0.0, 1.0, x))
        return out
    return np.ones_like(s)


def sinc_weight(Q2, H, s):
    """Generalized sinc weight: sin(x)/x for Q2 > 0, sinh(x)/x for Q2 < 0.

    ``x = 2 sqrt(|Q2|) H s / pi``; equals 1 for Q2 = 0 or s = 0.
    """
    if not H > 0:
        raise ValueError("H must be positive")
    out = _weight(weight_x2(Q2, H), s)
    return out[()] if np.ndim(out) == 0 else out
