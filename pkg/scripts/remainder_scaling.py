"""How fast does the two-plate kernel approach the single-plate one?

Prints the relative remainder r(H) = |A+(q, 0; H) - A+single(q, 0)| / |A+single|
at q = 1 and the local power-law slope d ln(remainder) / d ln H. At large
qH the absolute remainder tends to pi^2 q / (240 H^4), so r decays as H^-4
and drops below 1e-3 only near qH ~ 20.

    python3 scripts/remainder_scaling.py
"""
import math

from dyncasimir.kernels import KernelPoint, a_plus, a_plus_single


def main():
    q = 1.0
    ref = a_plus_single(q, 0.0).value.real
    prev = None
    print("%6s %14s %14s %10s %12s" % ("qH", "A+ - single", "relative", "slope",
                                       "240H^4/pi^2q"))
    for H in (1, 2, 4, 6, 8, 12, 16, 20, 24, 32):
        rem = a_plus(KernelPoint(q, 0.0, float(H))).value.real - ref
        rel = abs(rem / ref)
        slope = "" if prev is None else "%.3f" % (math.log(abs(rem) / abs(prev[1]))
                                                  / math.log(H / prev[0]))
        print("%6g %14.6e %14.6e %10s %12.6f" % (q * H, rem, rel, slope,
                                                 rem * 240 * H ** 4 / (math.pi ** 2 * q)))
        prev = (H, rem)


if __name__ == "__main__":
    main()
