"""Generate the small-s power series of s**6 * g(s) for both kernels.

The coefficients are obtained from a Cauchy contour integral evaluated
with mpmath at 60 digits (radius 1, well inside the nearest singularity
at |s| = pi/2) and written to ``src/dyncasimir/_series.py``.

    python3 scripts/gen_series.py
"""
import os
import sys

import mpmath as mp

mp.mp.dps = 60
NTERMS = 24
NPTS = 256
RADIUS = mp.mpf(1)


def g(s, sign):
    c = mp.cosh(s) / mp.sinh(s) ** 3
    t = mp.sinh(s) / mp.cosh(s) ** 3
    pi2 = mp.pi ** 2
    r = (s ** 2 - 3 * pi2 / 4) / (s ** 2 + pi2 / 4) ** 3
    return (1 / s ** 3 + sign * c) ** 2 + t ** 2 + sign * 2 * s * t * r


def coefficients(sign):
    vals = []
    for j in range(NPTS):
        z = RADIUS * mp.expjpi(2 * mp.mpf(j) / NPTS)
        vals.append(z ** 6 * g(z, sign))
    out = []
    for k in range(NTERMS):
        n = 2 * k
        acc = mp.mpf(0)
        for j, v in enumerate(vals):
            acc += v * mp.expjpi(-2 * mp.mpf(j) * n / NPTS)
        out.append(mp.re(acc) / NPTS / RADIUS ** n)
    return out


def main(path):
    plus = coefficients(+1)
    minus = coefficients(-1)
    # leading terms are exact rationals; pin them
    assert abs(plus[0] - 4) < 1e-30 and abs(plus[1]) < 1e-30
    assert abs(plus[2] + mp.mpf(4) / 15) < 1e-30
    assert all(abs(m) < 1e-30 for m in minus[:4])
    plus[1] = 0
    minus[:4] = [0, 0, 0, 0]
    lines = [
        '"""Power series of s**6 * g(s) about s = 0 (generated, do not edit).',
        "",
        "s**6 g(s) = sum_k COEF[k] s**(2k), radius of convergence pi/2.",
        "Produced by scripts/gen_series.py (mpmath contour integral, 60 digits).",
        '"""',
        "",
        "PLUS = (",
    ]
    lines += ["    %s," % mp.nstr(c, 20, min_fixed=1, max_fixed=0) if c else "    0.0," for c in plus]
    lines += [")", "", "MINUS = ("]
    lines += ["    %s," % mp.nstr(c, 20, min_fixed=1, max_fixed=0) if c else "    0.0," for c in minus]
    lines += [")", ""]
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        here, "..", "src", "dyncasimir", "_series.py")
    main(target)
