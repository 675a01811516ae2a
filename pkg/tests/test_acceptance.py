"""Acceptance criteria 1-10, one pass/fail line each.

    pytest tests/test_acceptance.py -v      # one test per criterion
    python3 tests/test_acceptance.py        # summary table only

Each criterion is checked as stated; criteria that do not hold fail.
"""
import math
import subprocess
import sys
import time

import numpy as np
import pytest
import yaml

from dyncasimir import kernels as K
from dyncasimir import response as R
from dyncasimir import statics as S
from dyncasimir.config import build, load_scenario, motion_omega
from dyncasimir.kernels import KernelPoint, Region
from dyncasimir.units import MASS, SURFACE_TENSION, TIME, Mode, Quantity, from_natural, to_natural

PI = math.pi
ROOT = __file__.rsplit("/tests/", 1)[0]


def _line(n, ok, detail):
    return "ACCEPTANCE %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail)


def crit1():
    t0 = time.perf_counter()
    b = K.b_constant().value
    dt = time.perf_counter() - t0
    ok = abs(b - (-0.452448)) <= 1e-4 and dt < 1.0
    return ok, "B = %.10f (target -0.452448 +- 1e-4), %.3f s" % (b, dt)


def crit2():
    t0 = time.perf_counter()
    devs = []
    for H in (0.5, 1.0, 2.0):
        E, _ = S.casimir_energy_per_area(H)
        devs.append(abs(E.value * H ** 3 / (-PI ** 2 / 720) - 1))
    dt = time.perf_counter() - t0
    ok = max(devs) <= 1e-6 and dt < 1.0
    return ok, "max rel dev of E H^3 from -pi^2/720 = %.2e, %.3f s" % (max(devs), dt)


def crit3():
    ref = K.a_plus_single(1.0, 0.0).value.real
    rel = {H: abs(K.a_plus(KernelPoint(1.0, 0.0, H)).value.real - ref) / abs(ref)
           for H in (4.0, 8.0, 12.0)}
    mono = rel[4.0] > rel[8.0] > rel[12.0]
    near = rel[12.0] < 1e-3
    ok = mono and near
    return ok, ("rel dev at QH = 4, 8, 12: %.3g, %.3g, %.3g; monotone %s; < 1e-3 at QH = 12 %s"
                % (rel[4.0], rel[8.0], rel[12.0], mono, near))


def crit4():
    rng = np.random.default_rng(20240521)
    worst = 0.0
    n = 0
    while n < 20:
        Q2 = rng.uniform(-0.95 * PI ** 2, 9.0)
        if abs(Q2) < 1e-3:
            continue
        q1, q2 = rng.uniform(max(0.0, math.sqrt(max(Q2, 0.0))), 6.0, size=2)
        p1 = KernelPoint(q1, math.sqrt(q1 * q1 - Q2), 1.0)
        p2 = KernelPoint(q2, math.sqrt(q2 * q2 - Q2), 1.0)
        a, b = K.a_plus(p1), K.a_plus(p2)
        tol = 3 * (a.error_estimate + b.error_estimate)
        worst = max(worst, abs(a.value - b.value) / max(tol, 1e-300))
        n += 1
    return worst <= 1.0, "20 pairs, max |dA| / (3 x combined error) = %.3g" % worst


def crit5():
    worst = 0.0
    worst_im = 0.0
    for q in np.linspace(0.2, 2.0, 5):
        for f in np.linspace(0.1, 0.9, 5):
            p = KernelPoint(float(q), math.sqrt(q * q + f * PI ** 2), 1.0)
            assert p.region is Region.IIa
            a = K.a_plus(p)
            b = K.a_pm_residue_sum(p, "plus")
            worst = max(worst, abs(a.value - b.value))
            im_ref = K.a_plus_single(p.q, p.omega).value.imag
            worst_im = max(worst_im, abs(a.value.imag - im_ref) - a.error_estimate)
    ok = worst <= 1e-6 and worst_im <= 0.0
    return ok, ("5x5 IIa grid: max |quad - residue| = %.2e; max (|Im - single| - err) = %.2e"
                % (worst, worst_im))


def crit6():
    p = R.CorrugatedPlate(0.1, (1.0, 0.0))
    sc = R.CavityScenario(p)
    m_fd = None
    rels = []
    for w in (2e-3, 1e-3):
        rels.append(R.chi(w, sc).parallel.real / w ** 2)
    m_fd = (4 * rels[1] - rels[0]) / 3
    m_cf = R.mass_single(p, 1.0).parallel.value
    mass_rel = abs(m_fd / m_cf - 1)
    w = 10.0 * p.kmag
    eta_chi = R.chi(w, sc).parallel.imag / w
    eta_cf = R.viscosity_single(p, 1.0, w).parallel.value
    eta_rel = abs(eta_chi / eta_cf - 1)
    perp = (R.mass_single(p, 1.0).perpendicular.value == 0.0
            and R.viscosity_single(p, 1.0, w).perpendicular.value == 0.0
            and R.chi(w, sc).perpendicular == 0)
    ok = mass_rel <= 1e-4 and eta_rel <= 1e-6 and perp
    return ok, ("mass rel dev %.2e (<= 1e-4 %s); viscosity at omega = 10k rel dev %.3e "
                "(<= 1e-6 %s); perpendicular parts exactly zero %s"
                % (mass_rel, mass_rel <= 1e-4, eta_rel, eta_rel <= 1e-6, perp))


def crit7():
    H = 1.0
    p = R.CorrugatedPlate(0.01, (0.05 / H, 0.0))
    c, err = R.kernel_omega2_coefficient(p.kmag, H)
    ref = R.b_value() / (48 * H ** 3)
    mf, _ = R.mass_double_fd(p, 1.0, H)
    mc = R.mass_double(p, 1.0, H).parallel.value
    rel = abs(c / ref - 1)
    ok = rel <= 0.02 and abs(mf.parallel.value / mc - 1) <= 0.02
    return ok, ("kH = 0.05: omega^2 coefficient %.6g vs B/(48H^3) = %.6g, rel dev %.2e"
                % (c, ref, rel))


def crit8():
    doc = load_scenario(ROOT + "/scenarios/macroscopic_plate.yaml")
    sc = build(doc)
    w = motion_omega(doc)
    M = to_natural(Quantity(doc["plate1"]["density"] * doc["plate1"]["thickness"], MASS))
    dm_m = R.mass_single(sc.plate1, sc.area).parallel.value / M.value
    eta = R.viscosity_single(sc.plate1, sc.area, w).parallel.value
    tau = from_natural(Quantity(2 * M.value / eta, TIME, Mode.Natural)).value
    sig = to_natural(Quantity(0.5, SURFACE_TENSION)).value
    dc = S.capillary_corrections(1e-3, sig).relative_speed_shift
    ok = (1e-35 <= dm_m <= 1e-33 and 1e17 <= tau <= 1e19 and 1e-20 <= abs(dc) <= 1e-18)
    return ok, "dm/m = %.3g, tau = %.3g s, |dc/c| = %.3g (dc/c = %.3g)" % (dm_m, tau, abs(dc), dc)


def crit9():
    def F(alpha, d=0.05, H=1.0):
        p = R.CorrugatedPlate(d, (2.0, 0.0))
        sc = R.CavityScenario(p, p, H=H, motion=R.Static((alpha / 2.0, 0.0)))
        return R.josephson_dc(sc).value[0]

    amp = abs(F(PI / 2))
    odd = all(abs(F(-a) + F(a)) <= 1e-12 * amp for a in np.linspace(0.1, 3.0, 12))
    zero = abs(F(0.0)) <= 1e-12 * amp and abs(F(PI)) <= 1e-12 * amp
    grid = np.linspace(0.0, PI, 721)
    vals = np.abs([F(a) for a in grid])
    ext = abs(grid[np.argmax(vals)] - PI / 2) < 1e-12
    scaled = np.abs([F(a, d=0.2) for a in grid])
    argmax_inv = np.argmax(scaled) == np.argmax(vals)
    p = R.CorrugatedPlate(0.05, (2.0, 0.0))
    v = (3e-4, 1e-4)
    sc = R.CavityScenario(p, p, H=1.0, motion=R.Uniform(v))
    fac = R.josephson_ac_frequency(sc)
    t = np.linspace(0.0, 4 * PI / fac, 4001)
    Ft = R.josephson_ac(sc, t).value[:, 0]
    spec = np.abs(np.fft.rfft(Ft[:-1]))
    w_fft = 2 * PI * np.argmax(spec) / (t[-1] - t[0])
    freq_rel = abs(fac / (2.0 * v[0]) - 1)
    freq_ok = freq_rel <= 1e-10 and abs(w_fft / fac - 1) < 1e-9
    curve = {}
    for kH in (0.3, 1.0, 3.0):
        vals5 = [K.a_minus(KernelPoint(kH / H, 0.0, H)).value.real * H ** 5 for H in (0.5, 1.0, 2.5)]
        curve[kH] = np.ptp(vals5) / abs(np.mean(vals5))
    collapse = max(curve.values()) <= 1e-8
    ok = odd and zero and ext and argmax_inv and freq_ok and collapse
    return ok, ("odd %s, zero at 0/pi %s, extremum at pi/2 %s, argmax invariant %s, "
                "AC freq rel dev %.1e, H^5 A- spread %.1e"
                % (odd, zero, ext, argmax_inv, freq_rel, max(curve.values())))


def _cutoff_ratio(p, kind):
    s = K.a_plus_single(p.q, p.omega).value if kind == "plus" else 0.0
    i5 = K.a_divergence_info(p, 5.0 * p.H, kind)
    i10 = K.a_divergence_info(p, 10.0 * p.H, kind)
    r = (i10.cutoff_estimate - s).real / (i5.cutoff_estimate - s).real
    pred = math.exp(5 * (i5.K - 2)) / 2 ** 4
    return r / pred, i5.K


def crit10(tmp=None):
    H = 1.0
    flagged = True
    for q in np.linspace(0.0, 6.0, 25):
        for w in np.linspace(0.0, 9.0, 37):
            p = KernelPoint(float(q), float(w), H)
            wall = w * w > q * q + PI ** 2 / H ** 2 and abs(p.Q2 + PI ** 2) > 1e-12 * PI ** 2
            if wall != (K.classify(p) is Region.IIb):
                flagged = False
            if wall:
                try:
                    K.a_divergence_info(p, 5.0)
                except ValueError:
                    flagged = False
                try:
                    K.a_plus(p)
                    flagged = False
                except K.DivergentRegionError:
                    pass
    ratios = {}
    for w in (5.0, 8.0):
        for kind in ("plus", "minus"):
            ratios[(w, kind)] = _cutoff_ratio(KernelPoint(0.0, w, H), kind)
    gated = [ratios[(5.0, "plus")][0], ratios[(8.0, "plus")][0], ratios[(8.0, "minus")][0]]
    ratio_ok = all(abs(r - 1) <= 0.10 for r in gated)
    info = _cutoff_ratio(KernelPoint(0.0, 4.0, H), "plus")
    doc = {"units": "natural", "H": 1.0, "plate1": {"d": 0.1, "k": [1.0, 0.0]},
           "plate2": {"d": 0.1, "k": [1.0, 0.0]},
           "motion": {"type": "oscillatory", "amplitude": [0.01, 0.0], "omega": 5.0},
           "observables": ["chi"]}
    import tempfile
    with tempfile.NamedTemporaryFile("w", suffix=".yaml", delete=False) as fh:
        yaml.safe_dump(doc, fh)
    r = subprocess.run([sys.executable, "-m", "dyncasimir", "scenario", fh.name],
                       capture_output=True, text=True)
    exit_ok = r.returncode == 4
    ok = flagged and ratio_ok and exit_ok
    return ok, ("grid flags %s; I(10H)/I(5H) over exp[5(K-2)]/2^4: A+ K=%.2f %.3f, A+ K=%.2f %.3f, "
                "A- K=%.2f %.3f (A- K=%.2f %.3f, A+ K=%.2f %.3f informational); exit status %d"
                % (flagged, ratios[(5.0, "plus")][1], gated[0], ratios[(8.0, "plus")][1], gated[1],
                   ratios[(8.0, "minus")][1], gated[2], ratios[(5.0, "minus")][1],
                   ratios[(5.0, "minus")][0], info[1], info[0], r.returncode))


CRITERIA = [crit1, crit2, crit3, crit4, crit5, crit6, crit7, crit8, crit9, crit10]


@pytest.mark.parametrize("n", range(1, 11))
def test_acceptance(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, c in enumerate(CRITERIA, 1):
        ok, detail = c()
        results.append(ok)
        print(_line(i, ok, detail), flush=True)
    print("%d/%d criteria pass" % (sum(results), len(results)))
    sys.exit(0 if all(results) else 1)
