import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dyncasimir import integrands as I
from dyncasimir._series import MINUS, PLUS


def g_mp(mp, s, sign):
    s = mp.mpf(s)
    c = mp.cosh(s) / mp.sinh(s) ** 3
    t = mp.sinh(s) / mp.cosh(s) ** 3
    r = (s ** 2 - 3 * mp.pi ** 2 / 4) / (s ** 2 + mp.pi ** 2 / 4) ** 3
    return (1 / s ** 3 + sign * c) ** 2 + t ** 2 + sign * 2 * s * t * r


@pytest.mark.parametrize("s", [1e-3, 0.05, 0.3, 0.399, 0.401, 0.7, 1.0, 2.5, 7.0, 15.0, 40.0])
@pytest.mark.parametrize("kind", [I.GKind.PLUS, I.GKind.MINUS])
def test_g_against_mpmath(mp, s, kind):
    ref = g_mp(mp, s, kind.sign)
    assert I.g(s, kind) == pytest.approx(float(ref), rel=1e-11)
    hr = ref - 1 / mp.mpf(s) ** 6
    assert I.h(s, kind) == pytest.approx(float(hr), rel=5e-10, abs=1e-300)


@pytest.mark.parametrize("s", [1e-4, 0.1, 0.39, 0.41, 1.0, 5.0, 10.0])
def test_subtracted(mp, s):
    ref = g_mp(mp, s, 1) - 4 / mp.mpf(s) ** 6
    assert I.g_plus_subtracted(s) == pytest.approx(float(ref), rel=1e-9)


def test_subtracted_large_s_tail():
    # g+ - 4/s^6 -> -3/s^6, not zero
    assert I.g_plus_subtracted(10.0) == pytest.approx(-3e-6, rel=1e-3)


def test_series_leading_terms():
    assert PLUS[0] == 4.0 and PLUS[1] == 0.0
    assert PLUS[2] == pytest.approx(-4.0 / 15.0, rel=1e-14)
    assert MINUS[:4] == (0.0, 0.0, 0.0, 0.0) or np.allclose(MINUS[:4], 0, atol=1e-25)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.01, 30.0))
def test_even_and_vectorized(s):
    for kind in I.GKind:
        assert I.g(-s, kind) == I.g(s, kind)
        v = I.g(np.array([s, 2 * s]), kind)
        assert v[0] == I.g(s, kind)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.45, 8.0))
def test_complex_matches_real_axis(s):
    for kind in I.GKind:
        assert I.g_complex(complex(s, 0), kind).real == pytest.approx(I.g(s, kind), rel=1e-10)


def test_pole():
    with pytest.raises(I.PoleError):
        I.g_plus(0.0)
    assert np.isfinite(I.g_minus(0.0))


def test_weight():
    assert I.weight_x2(1.0, 1.0) == pytest.approx((2 / np.pi) ** 2)
    assert I.sinc_weight(0.0, 1.0, 3.0) == 1.0
