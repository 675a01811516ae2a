r"""Static Casimir energy between flat plates and capillary-wave shifts.

The energy per area follows from the reduced momentum integral

.. math::

    \frac{E}{A} = \hbar c \int \frac{d^3 p}{(2\pi)^3} \ln(1 - e^{-2 H p})
      = \frac{\hbar c}{2\pi^2} \int_0^\infty p^2 \ln(1 - e^{-2 H p})\, dp
      = -\frac{\pi^2 \hbar c}{720 H^3},

evaluated here by quadrature (not by the closed form) so that it serves
as an independent oracle.

For a fluid surface a distance H below a flat plate the same small-kH
kernel coefficient ``B/(48 H^3)`` that renormalizes the plate mass
shifts the surface mass density and tension,

    d rho = hbar B / (48 c H^3),   d sigma = hbar c B / (48 H^3),

and the capillary speed by ``d c_s / c_s = d sigma / (2 sigma)``.
"""
import math
from dataclasses import dataclass

import numpy as np

from .quad import integrate_semi_infinite
from .response import b_value, _nat
from .units import (AREA, DIMENSIONLESS, ENERGY_PER_AREA, FORCE, LENGTH,
                    MASS_PER_AREA, SURFACE_TENSION, Mode, Quantity)

__all__ = [
    "CapillaryResult",
    "ConvergenceError",
    "log_boltzmann_integral",
    "casimir_energy_per_area",
    "casimir_force",
    "capillary_corrections",
]

_PI2 = math.pi ** 2


class ConvergenceError(ArithmeticError):
    pass


def _integrand(x):
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        out = x * x * np.log(-np.expm1(-x))
    return np.where(x > 0, out, 0.0)


def log_boltzmann_integral(rel_tol=1e-13):
    """int_0^inf x^2 ln(1 - e^{-x}) dx  (= -pi^4/45) by quadrature."""
    r = integrate_semi_infinite(_integrand, 0.0, 1.0, rel_tol=rel_tol, abs_tol=1e-15)
    if not r.converged:
        raise ConvergenceError("log-Boltzmann integral did not converge")
    return r


def casimir_energy_per_area(H, rel_tol=1e-12):
    """E/A for perfect mirrors a distance H apart (natural units)."""
    H = float(_nat(H, LENGTH))
    if not H > 0:
        raise ValueError("H must be positive")
    # substitute x = 2 H p: p^2 dp = x^2 dx / (2H)^3
    r = log_boltzmann_integral(rel_tol)
    value = r.value / (2.0 * _PI2 * (2.0 * H) ** 3)
    err = r.abs_error_estimate / (2.0 * _PI2 * (2.0 * H) ** 3)
    q = Quantity(value, ENERGY_PER_AREA, Mode.Natural)
    return q, err


def casimir_force(H, area):
    """F = -pi^2 A / (240 H^4) (natural units; attractive)."""
    H = float(_nat(H, LENGTH))
    A = float(_nat(area, AREA))
    if not H > 0:
        raise ValueError("H must be positive")
    return Quantity(-_PI2 * A / (240.0 * H ** 4), FORCE, Mode.Natural)


@dataclass(frozen=True)
class CapillaryResult:
    delta_rho: Quantity
    delta_sigma: Quantity
    relative_speed_shift: float
    B: float


def capillary_corrections(H, sigma_bare, B=None):
    """Vacuum corrections to a fluid surface below a flat plate.

    ``relative_speed_shift`` is ``d sigma / (2 sigma)``; the density shift
    is reported separately and not folded into the speed.
    """
    H = float(_nat(H, LENGTH))
    sigma = float(_nat(sigma_bare, SURFACE_TENSION))
    if not (H > 0 and sigma > 0):
        raise ValueError("H and sigma must be positive")
    B = b_value() if B is None else B
    coef = B / (48.0 * H ** 3)
    return CapillaryResult(
        delta_rho=Quantity(coef, MASS_PER_AREA, Mode.Natural),
        delta_sigma=Quantity(coef, SURFACE_TENSION, Mode.Natural),
        relative_speed_shift=B / (96.0 * sigma * H ** 3),
        B=B,
    )
