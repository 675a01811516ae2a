import math

import numpy as np
import pytest
from scipy import integrate as sint
from scipy import special

from dyncasimir.quad import (PoleIsolationError, QuadResult, integrate,
                             integrate_semi_infinite, residue_numeric, wynn_epsilon)

# (f, a, b, exact)
FINITE = [
    (lambda x: x ** 2, 0.0, 1.0, 1 / 3),
    (np.sin, 0.0, math.pi, 2.0),
    (np.exp, -1.0, 2.0, math.e ** 2 - 1 / math.e),
    (lambda x: 1 / (1 + x * x), -5.0, 5.0, 2 * math.atan(5)),
    (np.sqrt, 0.0, 1.0, 2 / 3),
    (lambda x: np.log(x), 1e-300, 1.0, -1.0),
    (lambda x: np.abs(x - 0.3), 0.0, 1.0, 0.3 ** 2 / 2 + 0.7 ** 2 / 2),
    (lambda x: np.cos(50 * x), 0.0, 1.0, math.sin(50) / 50),
    (lambda x: 1 / np.sqrt(x), 1e-300, 1.0, 2.0),
    (lambda x: np.exp(-x * x), -3.0, 3.0, math.sqrt(math.pi) * math.erf(3)),
    (lambda x: x ** 9, -1.0, 2.0, (2 ** 10 - 1) / 10),
    (lambda x: 1 / (1e-4 + x * x), -1.0, 1.0, 2 * math.atan(100) * 100),
]

SEMI = [
    (lambda s: np.exp(-s), 0.0, 1.0, None, 1.0),
    (lambda s: s ** 3 * np.exp(-s), 0.0, 1.0, None, 6.0),
    (lambda s: 1 / (1 + s * s), 0.0, 1.0, None, math.pi / 2),
    (lambda s: np.sinc(s / math.pi), 0.0, 1.0, math.pi, math.pi / 2),
    (lambda s: np.sin(s) / (1 + s), 0.0, 1.0, math.pi,
     float(special.sici(1)[0] * 0 + (math.cos(1) * (math.pi / 2 - special.sici(1)[0])
                                       + math.sin(1) * special.sici(1)[1]))),
    (lambda s: np.cos(2 * s) * np.exp(-s / 5), 0.0, 5.0, math.pi / 2, 0.2 / (0.04 + 4)),
    (lambda s: s * s / np.expm1(s), 0.0, 1.0, None, 2 * special.zeta(3)),
    (lambda s: np.exp(-s * s), 1.0, 1.0, None, math.sqrt(math.pi) / 2 * math.erfc(1)),
]


@pytest.mark.parametrize("f,a,b,exact", FINITE)
def test_finite_battery(f, a, b, exact):
    r = integrate(f, a, b, rel_tol=1e-11, abs_tol=1e-14)
    assert isinstance(r, QuadResult)
    err = abs(r.value - exact)
    # the estimate is conservative whether or not the target was met
    assert err <= max(r.abs_error_estimate, 1e-14), (err, r.abs_error_estimate)
    assert err < 1e-9 * max(1.0, abs(exact))
    if r.converged:
        assert err <= max(1e-11 * abs(exact), 1e-14) * 10


@pytest.mark.parametrize("f,a,L,hp,exact", SEMI)
def test_semi_infinite_battery(f, a, L, hp, exact):
    r = integrate_semi_infinite(f, a, L, rel_tol=1e-11, abs_tol=1e-14, half_period=hp)
    err = abs(r.value - exact)
    assert err <= max(r.abs_error_estimate, 1e-13), (err, r.abs_error_estimate)
    assert err < 1e-8


def test_against_scipy():
    f = lambda x: np.sin(x) ** 2 * np.exp(-x / 3)
    ours = integrate(f, 0.0, 10.0).value
    ref = sint.quad(f, 0.0, 10.0, epsabs=1e-14, epsrel=1e-13)[0]
    assert ours == pytest.approx(ref, rel=1e-11)


def test_iterable_result():
    v, e = integrate(np.cos, 0.0, 1.0)
    assert v == pytest.approx(math.sin(1)) and e >= 0


def test_nonconvergence_flagged():
    r = integrate(lambda x: np.sin(1 / x), 1e-12, 1.0, rel_tol=1e-14, abs_tol=1e-300,
                  max_intervals=50)
    assert not r.converged


def test_bad_interval():
    with pytest.raises(ValueError):
        integrate(np.sin, 0.0, math.inf)


def test_wynn_on_alternating_series():
    partial = np.cumsum([(-1) ** n / (2 * n + 1) for n in range(20)])
    est, spread = wynn_epsilon(partial)
    assert est == pytest.approx(math.pi / 4, abs=1e-10)
    assert spread < 1e-6


@pytest.mark.parametrize("z0,order,f,exact", [
    (0.0, 1, lambda z: np.exp(z) / z, 1.0),
    (1j, 1, lambda z: 1 / (z * z + 1), -0.5j),
    (0.5j * math.pi, 2, lambda z: 1 / np.cosh(z) ** 2, 0.0),
    (0.0, 7, lambda z: np.cos(z) / z ** 7, -1 / 720),
    (0.5j * math.pi, 1, lambda z: 1 / np.cosh(z), -1j),
])
def test_residues(z0, order, f, exact):
    r = residue_numeric(f, z0, order, radius=0.5)
    assert abs(r - exact) < 1e-10


def test_residue_detects_extra_pole():
    # a second pole inside the requested radius is not isolated
    with pytest.raises(PoleIsolationError):
        residue_numeric(lambda z: 1 / (z * (z - 0.3)), 0.0, 1, radius=0.5)
