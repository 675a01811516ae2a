import math

import pytest

from dyncasimir import statics as S
from dyncasimir.units import SURFACE_TENSION, Quantity, to_natural


def test_log_boltzmann():
    assert S.log_boltzmann_integral().value == pytest.approx(-math.pi ** 4 / 45, rel=1e-12)


@pytest.mark.parametrize("H", [0.5, 1.0, 2.0, 1e-6])
def test_energy(H):
    E, err = S.casimir_energy_per_area(H)
    assert E.value * H ** 3 == pytest.approx(-math.pi ** 2 / 720, rel=1e-10)
    assert err >= 0


def test_force_is_energy_derivative():
    H, h = 1.0, 1e-4
    dE = (S.casimir_energy_per_area(H + h)[0].value
          - S.casimir_energy_per_area(H - h)[0].value) / (2 * h)
    assert S.casimir_force(H, 1.0).value == pytest.approx(-dE, rel=1e-7)


def test_capillary():
    sig = to_natural(Quantity(0.5, SURFACE_TENSION)).value
    c = S.capillary_corrections(1e-3, sig)
    assert c.B == pytest.approx(-0.452448, abs=1e-6)
    assert c.delta_sigma.value == pytest.approx(c.B / (48 * 1e-9))
    assert c.relative_speed_shift == pytest.approx(c.delta_sigma.value / (2 * sig))
    assert 1e-20 <= abs(c.relative_speed_shift) <= 1e-18
    with pytest.raises(ValueError):
        S.capillary_corrections(-1.0, sig)
