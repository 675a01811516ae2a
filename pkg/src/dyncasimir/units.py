"""Unit systems and dimensioned quantities.

Numerics run in natural units with hbar = c = 1 and the meter as the base
length. A quantity of SI dimension L^a T^b M^m becomes a pure length power
``a + b - m`` after multiplying its SI value by ``c**b * (c/hbar)**m``:
times become lengths (``t -> c t``) and masses become inverse lengths
(``m -> m c / hbar``, the reduced Compton wavenumber).

Quantities carry their SI dimension tuple in both systems, so converting
back needs no extra information.
"""
import enum
import math
from dataclasses import dataclass

from scipy import constants as _const

__all__ = [
    "DimensionError",
    "Mode",
    "UnitSystem",
    "NATURAL",
    "SI",
    "Quantity",
    "to_natural",
    "from_natural",
    "DIMENSIONLESS",
    "LENGTH",
    "TIME",
    "MASS",
    "AREA",
    "VELOCITY",
    "FREQUENCY",
    "WAVENUMBER",
    "ENERGY",
    "FORCE",
    "ACTION",
    "POWER",
    "ENERGY_PER_AREA",
    "MASS_PER_AREA",
    "SURFACE_TENSION",
    "VISCOSITY",
    "DENSITY",
    "KERNEL",
    "quantity",
    "unit_label",
    "HBAR_SI",
    "C_SI",
]

HBAR_SI = _const.hbar
C_SI = _const.c


class DimensionError(TypeError):
    """Mismatched or malformed dimensions."""


class Mode(enum.Enum):
    Natural = "natural"
    SI = "si"


@dataclass(frozen=True)
class UnitSystem:
    mode: Mode
    hbar: float
    c: float

    def __post_init__(self):
        if self.mode is Mode.Natural and (self.hbar != 1.0 or self.c != 1.0):
            raise ValueError("natural units require hbar = c = 1")


NATURAL = UnitSystem(Mode.Natural, 1.0, 1.0)
SI = UnitSystem(Mode.SI, HBAR_SI, C_SI)


def _check_dim(dim):
    if not (isinstance(dim, tuple) and len(dim) == 3):
        raise DimensionError("dimension must be a (length, time, mass) tuple: %r" % (dim,))
    for e in dim:
        if isinstance(e, bool) or not isinstance(e, (int, float)) or not math.isfinite(e):
            raise DimensionError("malformed dimension exponent %r" % (e,))
    return tuple(int(e) if float(e).is_integer() else float(e) for e in dim)


@dataclass(frozen=True)
class Quantity:
    """A value with SI dimension exponents over (length, time, mass).

    ``system`` records whether ``value`` is expressed in SI or natural
    units; in natural units the physical dimension is ``length_power``.
    """

    value: complex
    dim: tuple = (0, 0, 0)
    system: Mode = Mode.SI

    def __post_init__(self):
        object.__setattr__(self, "dim", _check_dim(self.dim))

    @property
    def length_power(self):
        a, b, m = self.dim
        return a + b - m

    @property
    def dimensionless(self):
        return self.dim == (0, 0, 0)

    def _same(self, other):
        if not isinstance(other, Quantity):
            if self.dimensionless:
                return Quantity(other, (0, 0, 0), self.system)
            raise DimensionError("cannot combine %s quantity with a bare number" % (self.dim,))
        if other.dim != self.dim:
            raise DimensionError("dimension mismatch: %s vs %s" % (self.dim, other.dim))
        if other.system is not self.system:
            raise DimensionError("unit system mismatch")
        return other

    def __add__(self, other):
        other = self._same(other)
        return Quantity(self.value + other.value, self.dim, self.system)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._same(other)
        return Quantity(self.value - other.value, self.dim, self.system)

    def __rsub__(self, other):
        other = self._same(other)
        return Quantity(other.value - self.value, self.dim, self.system)

    def __neg__(self):
        return Quantity(-self.value, self.dim, self.system)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            if other.system is not self.system:
                raise DimensionError("unit system mismatch")
            dim = tuple(x + y for x, y in zip(self.dim, other.dim))
            return Quantity(self.value * other.value, dim, self.system)
        return Quantity(self.value * other, self.dim, self.system)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            if other.system is not self.system:
                raise DimensionError("unit system mismatch")
            dim = tuple(x - y for x, y in zip(self.dim, other.dim))
            return Quantity(self.value / other.value, dim, self.system)
        return Quantity(self.value / other, self.dim, self.system)

    def __rtruediv__(self, other):
        dim = tuple(-x for x in self.dim)
        return Quantity(other / self.value, dim, self.system)

    def __pow__(self, n):
        return Quantity(self.value ** n, tuple(n * x for x in self.dim), self.system)

    def __lt__(self, other):
        return self.value < self._same(other).value

    def __float__(self):
        if not self.dimensionless:
            raise DimensionError("only dimensionless quantities convert to float")
        return float(self.value.real if isinstance(self.value, complex) else self.value)


def _factor(dim, u):
    a, b, m = dim
    return u.c ** b * (u.c / u.hbar) ** m


def to_natural(x, u=SI):
    """Express ``x`` (given in system ``u``) in natural units."""
    if not isinstance(x, Quantity):
        raise DimensionError("to_natural expects a Quantity")
    _check_dim(x.dim)
    if x.system is Mode.Natural:
        return x
    return Quantity(x.value * _factor(x.dim, u), x.dim, Mode.Natural)


def from_natural(x, u=SI):
    """Convert a natural-unit quantity back to system ``u``."""
    if not isinstance(x, Quantity):
        raise DimensionError("from_natural expects a Quantity")
    _check_dim(x.dim)
    if u.mode is Mode.Natural:
        return x
    if x.system is Mode.SI:
        return x
    return Quantity(x.value / _factor(x.dim, u), x.dim, Mode.SI)


DIMENSIONLESS = (0, 0, 0)
LENGTH = (1, 0, 0)
TIME = (0, 1, 0)
MASS = (0, 0, 1)
AREA = (2, 0, 0)
VELOCITY = (1, -1, 0)
FREQUENCY = (0, -1, 0)
WAVENUMBER = (-1, 0, 0)
ENERGY = (2, -2, 1)
FORCE = (1, -2, 1)
ACTION = (2, -1, 1)
POWER = (2, -3, 1)
ENERGY_PER_AREA = (0, -2, 1)
MASS_PER_AREA = (-2, 0, 1)
SURFACE_TENSION = (0, -2, 1)
VISCOSITY = (0, -1, 1)        # friction coefficient, force per velocity
DENSITY = (-3, 0, 1)
KERNEL = (-5, 0, 0)           # A+- in natural units: length^-5

UNIT_NAMES = {
    DIMENSIONLESS: "1",
    LENGTH: "m",
    TIME: "s",
    MASS: "kg",
    AREA: "m^2",
    VELOCITY: "m/s",
    FREQUENCY: "1/s",
    WAVENUMBER: "1/m",
    ENERGY: "J",
    FORCE: "N",
    ACTION: "J s",
    POWER: "W",
    ENERGY_PER_AREA: "J/m^2",
    MASS_PER_AREA: "kg/m^2",
    VISCOSITY: "kg/s",
    DENSITY: "kg/m^3",
}


def unit_label(q):
    """Human-readable unit string for a Quantity in its current system."""
    if q.system is Mode.Natural:
        p = q.length_power
        return "1" if p == 0 else ("m^%d" % p if p != 1 else "m")
    return UNIT_NAMES.get(q.dim, "m^%s s^%s kg^%s" % q.dim)


def quantity(value, dim=DIMENSIONLESS, natural=False):
    return Quantity(value, dim, Mode.Natural if natural else Mode.SI)
