"""Character map of the kernel regions in the (q, omega) plane.

    python3 scripts/region_map.py [H] [n]
"""
import sys

import numpy as np

from dyncasimir.kernels import KernelPoint, Region, classify

GLYPH = {Region.I: ".", Region.IIa: "~", Region.IIb: "#",
         Region.BoundaryLightCone: "/", Region.BoundaryFirstMode: "+"}


def main(H=1.0, n=41):
    qs = np.linspace(0.0, 4.0 * np.pi / H, n)
    ws = np.linspace(0.0, 5.0 * np.pi / H, n)
    for w in ws[::-1]:
        line = "".join(GLYPH[classify(KernelPoint(float(q), float(w), H))] for q in qs)
        print("%7.3f %s" % (w, line))
    print("        q from 0 to %.3f; '.' I, '~' IIa, '#' IIb, '/' light cone, '+' first mode"
          % qs[-1])


if __name__ == "__main__":
    args = sys.argv[1:]
    main(float(args[0]) if args else 1.0, int(args[1]) if len(args) > 1 else 41)
