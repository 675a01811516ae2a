"""Recompute the headline numbers of the model and print them as a table.

    python3 scripts/reproduce_numbers.py
"""
import math
import time

from dyncasimir import kernels as K
from dyncasimir import response as R
from dyncasimir import statics as S
from dyncasimir.config import build, load_scenario, motion_omega
from dyncasimir.units import (MASS, SURFACE_TENSION, TIME, Mode, Quantity, from_natural,
                              to_natural)

ROOT = __file__.rsplit("/scripts/", 1)[0]


def row(name, value, ref=""):
    print("%-44s %-24s %s" % (name, "%.10g" % value if isinstance(value, float) else value, ref))


def main():
    t0 = time.time()
    b = K.b_constant()
    row("B = int s^2 (g+ - 4/s^6) ds", b.value, "-0.452448")
    row("  quadrature error estimate", b.abs_error_estimate)
    for H in (0.5, 1.0, 2.0):
        E, _ = S.casimir_energy_per_area(H)
        row("E H^3 at H = %g" % H, E.value * H ** 3, "-pi^2/720 = %.10g" % (-math.pi ** 2 / 720))

    doc = load_scenario(ROOT + "/scenarios/macroscopic_plate.yaml")
    sc = build(doc)
    w = motion_omega(doc)
    M = to_natural(Quantity(doc["plate1"]["density"] * doc["plate1"]["thickness"], MASS, Mode.SI))
    dm = R.mass_single(sc.plate1, sc.area).parallel
    eta = R.viscosity_single(sc.plate1, sc.area, w).parallel
    eta_x = R.viscosity_single(sc.plate1, sc.area, w, exact=True).parallel
    row("macroscopic plate dm/m", dm.value / M.value, "~1e-34")
    row("macroscopic plate eta [kg/s]", from_natural(eta).value)
    row("macroscopic plate tau = 2M/eta [s]",
        from_natural(Quantity(2 * M.value / eta.value, TIME, Mode.Natural)).value, "~1e18")
    row("  same with exact Im chi / omega [s]",
        from_natural(Quantity(2 * M.value / eta_x.value, TIME, Mode.Natural)).value)
    row("omega / (c k) used", w / sc.plate1.kmag, "cyclic f = 2ck")

    sig = to_natural(Quantity(0.5, SURFACE_TENSION, Mode.SI)).value
    cap = S.capillary_corrections(1e-3, sig)
    row("mercury d c_s / c_s", cap.relative_speed_shift, "~1e-19 (magnitude)")

    for kH in (0.05, 0.2, 1.0):
        H = 1.0
        pl = R.CorrugatedPlate(0.01, (kH / H, 0.0))
        m2 = R.mass_double(pl, 1.0, H).parallel.value
        mf, err = R.mass_double_fd(pl, 1.0, H)
        row("double-plate mass fd / small-kH at kH=%g" % kH, mf.parallel.value / m2)

    for H, k in ((1.0, 1.0), (2.0, 0.5), (0.5, 2.0)):
        am = K.a_minus(K.KernelPoint(k, 0.0, H)).value.real
        row("H^5 A-(k, 0) at kH = 1 (H = %g)" % H, am * H ** 5)
    print("elapsed %.2f s" % (time.time() - t0))


if __name__ == "__main__":
    main()
