import math

import pytest
from hypothesis import given, settings, strategies as st

from dyncasimir.units import (C_SI, HBAR_SI, NATURAL, SI, DimensionError, FORCE, LENGTH,
                              MASS, TIME, VISCOSITY, Mode, Quantity, UnitSystem,
                              from_natural, to_natural, unit_label)

dims = st.tuples(*(st.integers(-3, 3),) * 3)
values = st.floats(1e-20, 1e20) | st.floats(-1e20, -1e-20)


@settings(max_examples=1000, deadline=None)
@given(values, dims)
def test_round_trip(v, dim):
    q = Quantity(v, dim, Mode.SI)
    back = from_natural(to_natural(q))
    assert back.system is Mode.SI
    assert back.dim == dim
    assert math.isclose(back.value, v, rel_tol=1e-12)


@settings(max_examples=200, deadline=None)
@given(values, dims)
def test_length_power_consistent(v, dim):
    n = to_natural(Quantity(v, dim))
    assert n.length_power == dim[0] + dim[1] - dim[2]


def test_known_conversions():
    assert to_natural(Quantity(1.0, TIME)).value == pytest.approx(C_SI)
    # electron mass -> reduced Compton wavenumber
    me = 9.1093837015e-31
    assert to_natural(Quantity(me, MASS)).value == pytest.approx(me * C_SI / HBAR_SI)
    assert to_natural(Quantity(2.0, LENGTH)).value == 2.0
    f = to_natural(Quantity(1.0, FORCE))
    assert f.length_power == -2
    assert f.value == pytest.approx(1.0 / (HBAR_SI * C_SI))


def test_arithmetic_dimensions():
    a = Quantity(2.0, LENGTH)
    b = Quantity(3.0, TIME)
    assert (a / b).dim == (1, -1, 0)
    assert (a * a).dim == (2, 0, 0)
    assert (a ** 3).dim == (3, 0, 0)
    assert (1.0 / b).dim == (0, -1, 0)
    with pytest.raises(DimensionError):
        a + b
    with pytest.raises(DimensionError):
        a + 1.0
    with pytest.raises(DimensionError):
        float(a)
    with pytest.raises(DimensionError):
        a + to_natural(a)
    assert float(Quantity(4.0)) == 4.0


def test_malformed_dimension():
    with pytest.raises(DimensionError):
        Quantity(1.0, (1, 0))
    with pytest.raises(DimensionError):
        Quantity(1.0, (1, float("nan"), 0))
    with pytest.raises(DimensionError):
        to_natural(3.0)


def test_systems():
    assert NATURAL.hbar == NATURAL.c == 1.0
    assert SI.c == C_SI
    with pytest.raises(ValueError):
        UnitSystem(Mode.Natural, 2.0, 1.0)
    assert from_natural(Quantity(1.0, LENGTH, Mode.Natural), NATURAL).system is Mode.Natural


def test_labels():
    assert unit_label(Quantity(1.0, VISCOSITY)) == "kg/s"
    assert unit_label(to_natural(Quantity(1.0, VISCOSITY))) == "m^-2"
    assert unit_label(Quantity(1.0, LENGTH, Mode.Natural)) == "m"
