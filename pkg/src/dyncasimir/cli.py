"""Command line front end.

Verbs::

    dyncasimir sweep     --q 0,0.5,1 --omega lin:0:3:7 --H 1 [--kernel both]
    dyncasimir scenario  scenarios/macroscopic_plate.yaml [--si]
    dyncasimir regions   --H 1 --q-max 4 --omega-max 6 --n 41
    dyncasimir selftest

Exit statuses: 0 success, 1 selftest failure, 2 validation error,
3 numerical non-convergence, 4 divergent-region request.
The default number of worker processes is read from DYNCASIMIR_JOBS.
"""
import argparse
import concurrent.futures as futures
import io
import math
import os
import sys
import time

import numpy as np
import yaml

from . import __version__
from . import kernels as K
from . import response as R
from . import statics as S
from .config import ScenarioError, build, load_scenario, motion_omega
from .units import (C_SI, FORCE, FREQUENCY, MASS, MASS_PER_AREA, TIME, DIMENSIONLESS,
                    Mode, Quantity, from_natural, unit_label)

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_VALIDATION = 2
EXIT_NONCONVERGED = 3
EXIT_DIVERGENT = 4

ENV_JOBS = "DYNCASIMIR_JOBS"
HEADER = ["q", "omega", "Q2", "region", "re_A", "im_A", "err", "method",
          "kernel", "K", "converged", "unit_A"]


class ValidationError(ValueError):
    pass


def _fmt(x):
    if x is None or x == "":
        return ""
    if isinstance(x, str):
        return x
    return "%.17g" % x


# ---------------------------------------------------------------------------
# sweep

def parse_grid(text):
    """'a,b,c' or 'lin:start:stop:n' -> strictly increasing list of floats."""
    text = text.strip()
    if not text:
        raise ValidationError("empty grid")
    if text.startswith("lin:"):
        parts = text.split(":")
        if len(parts) != 4:
            raise ValidationError("grid spec must be lin:start:stop:n")
        a, b, n = float(parts[1]), float(parts[2]), int(parts[3])
        if n < 1:
            raise ValidationError("grid needs n >= 1")
        vals = list(np.linspace(a, b, n))
    else:
        vals = [float(v) for v in text.split(",") if v.strip()]
    if not vals:
        raise ValidationError("empty grid")
    if any(not math.isfinite(v) for v in vals):
        raise ValidationError("grid values must be finite")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise ValidationError("grid must be strictly increasing")
    return vals


def _parse_H(text):
    if str(text).lower() in ("inf", "infinite", "infinity"):
        return math.inf
    H = float(text)
    if not H > 0:
        raise ValidationError("H must be positive")
    return H


def _check_tol(tol):
    if not (1e-12 < tol < 1e-2):
        raise ValidationError("tolerance must lie in (1e-12, 1e-2)")
    return tol


def _eval_point(args):
    q, w, H, kind, tol = args
    p = K.KernelPoint(q, w, H)
    reg = K.classify(p)
    if reg is K.Region.IIb:
        info = K._divergence(p)
        return [q, w, p.Q2, reg.value, None, None, None, K.Method.Divergent.value,
                kind, info.K, "", "m^-5"], True
    if q < 0:
        raise ValidationError("q must be >= 0")
    kv = K.a_pm(p, kind, tol)
    Kval = p.K if p.Q2 < 0 else None
    return [q, w, p.Q2, reg.value, kv.value.real, kv.value.imag, kv.error_estimate,
            kv.method.value, kind, Kval, "yes" if kv.converged else "no", "m^-5"], kv.converged


def run_sweep(q_grid, omega_grid, H, kernel="both", tol=1e-10, jobs=1, si=False):
    """Evaluate kernels on a grid; returns (rows, all_converged).

    Rows follow grid order (q outer, omega inner, then kernel) regardless
    of the order in which workers finish.
    """
    kinds = {"plus": ["plus"], "minus": ["minus"], "both": ["plus", "minus"]}[kernel]
    if any(q < 0 for q in q_grid):
        raise ValidationError("q must be >= 0")
    wf = 1.0 / C_SI if si else 1.0
    tasks = [(q, w * wf, H, kd, tol) for q in q_grid for w in omega_grid for kd in kinds]
    if jobs > 1 and len(tasks) > 1:
        with futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            out = list(ex.map(_eval_point, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        out = [_eval_point(t) for t in tasks]
    rows = []
    ok = True
    for (row, conv), t in zip(out, tasks):
        if si:
            row[1] = t[1] * C_SI            # omega back to rad/s
        rows.append(row)
        ok = ok and conv
    return rows, ok


def write_table(rows, stream, meta, header=HEADER):
    for key, val in meta:
        stream.write("# %s: %s\n" % (key, val))
    stream.write(",".join(header) + "\n")
    for r in rows:
        stream.write(",".join(_fmt(x) for x in r) + "\n")


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise ValidationError("cannot write %s: %s" % (path, exc)) from None


def _units_meta(si):
    if si:
        return "si (q, Q in 1/m; omega in rad/s; A in m^-5 with hbar c factored out)"
    return "natural (hbar = c = 1, length unit m; q, omega in 1/m; A in m^-5)"


def cmd_sweep(args):
    q_grid = parse_grid(args.q)
    w_grid = parse_grid(args.omega)
    H = _parse_H(args.H)
    tol = _check_tol(args.tol)
    rows, ok = run_sweep(q_grid, w_grid, H, args.kernel, tol, args.jobs, args.si)
    meta = [("tool", "dyncasimir %s" % __version__), ("command", "sweep"),
            ("units", _units_meta(args.si)), ("tolerance", _fmt(tol)),
            ("H", "inf" if H == math.inf else _fmt(H)), ("kernel", args.kernel)]
    fh, close = _open_output(args.output)
    try:
        write_table(rows, fh, meta)
    finally:
        if close:
            fh.close()
    return EXIT_OK if ok else EXIT_NONCONVERGED


# ---------------------------------------------------------------------------
# regions

def region_grid(H, q_max, omega_max, n):
    if n < 2:
        raise ValidationError("n must be >= 2")
    if not (q_max > 0 and omega_max > 0):
        raise ValidationError("q_max and omega_max must be positive")
    qs = np.linspace(0.0, q_max, n)
    ws = np.linspace(0.0, omega_max, n)
    rows = []
    for q in qs:
        for w in ws:
            p = K.KernelPoint(float(q), float(w), H)
            rows.append([float(q), float(w), p.Q2, K.classify(p).value])
    return rows


def cmd_regions(args):
    H = _parse_H(args.H)
    rows = region_grid(H, args.q_max, args.omega_max, args.n)
    meta = [("tool", "dyncasimir %s" % __version__), ("command", "regions"),
            ("units", _units_meta(False)), ("H", "inf" if H == math.inf else _fmt(H)),
            ("boundaries", "light cone omega = q; first mode omega^2 = q^2 + pi^2/H^2")]
    fh, close = _open_output(args.output)
    try:
        write_table(rows, fh, meta, header=["q", "omega", "Q2", "region"])
    finally:
        if close:
            fh.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# scenario

def _entry(observable, name, q, method, error=0.0, si=False, note=None):
    if isinstance(q, Quantity):
        qq = from_natural(q) if si else q
        val = qq.value
        unit = unit_label(qq)
        if error:
            error = abs(error) * abs(val / q.value) if q.value else error
    else:
        val, unit = q, "1"
    if isinstance(val, np.ndarray):
        val = [float(v) for v in val]
    elif isinstance(val, complex):
        val = {"re": float(val.real), "im": float(val.imag)}
    else:
        val = float(val)
    out = {"observable": observable, "quantity": name, "value": val, "unit": unit,
           "method": method, "error_estimate": float(error)}
    if note:
        out["note"] = note
    return out


def _plate_mass(doc, area):
    p = doc["plate1"]
    if "density" in p and "thickness" in p:
        m_si = p["density"] * p["thickness"] * area
        return Quantity(m_si, MASS, Mode.SI)
    return None


def evaluate_scenario(doc, si=False):
    """Compute requested observables; returns (report dict, exit status)."""
    from .units import to_natural
    tol = doc.get("tolerance", 1e-10)
    results = []
    errors = []
    status = EXIT_OK
    sc = build(doc) if "plate1" in doc else None
    w = motion_omega(doc)
    area = doc.get("area", 1.0)
    for obs in doc["observables"]:
        try:
            if obs == "mass_single":
                m = R.mass_single(sc.plate1, sc.area)
                results.append(_entry(obs, "delta_m_parallel", m.parallel, "ClosedForm", si=si))
                results.append(_entry(obs, "delta_m_perpendicular", m.perpendicular,
                                      "ClosedForm", si=si))
                M = _plate_mass(doc, area)
                if M is not None:
                    ratio = m.parallel.value / to_natural(M).value
                    results.append(_entry(obs, "delta_m_over_m", ratio, "ClosedForm"))
            elif obs == "viscosity_single":
                if w is None:
                    raise ScenarioError("viscosity_single needs an oscillatory motion")
                eta = R.viscosity_single(sc.plate1, sc.area, w)
                results.append(_entry(obs, "eta_parallel", eta.parallel, "ClosedForm", si=si))
                results.append(_entry(obs, "eta_perpendicular", eta.perpendicular,
                                      "ClosedForm", si=si))
                ex = R.viscosity_single(sc.plate1, sc.area, w, exact=True)
                results.append(_entry(obs, "eta_parallel_exact", ex.parallel, "ClosedForm",
                                      si=si, note="Im chi / omega from the single-plate kernel"))
                M = _plate_mass(doc, area)
                if M is not None:
                    tau = Quantity(2.0 * to_natural(M).value / eta.parallel.value, TIME,
                                   Mode.Natural)
                    results.append(_entry(obs, "decay_time", tau, "ClosedForm", si=si,
                                          note="tau = 2 M / eta"))
            elif obs == "mass_double":
                H = float(doc["H"])
                m2 = R.mass_double(sc.plate1, sc.area, H)
                kH = sc.plate1.kmag * H
                results.append(_entry(obs, "kH", kH, "ClosedForm"))
                results.append(_entry(obs, "delta_m_parallel_small_kH", m2.parallel,
                                      "ClosedForm", si=si, note="leading order in kH"))
                mf, err = R.mass_double_fd(sc.plate1, sc.area, H)
                results.append(_entry(obs, "delta_m_parallel_fd", mf.parallel,
                                      "SubtractedQuadrature", err, si=si))
                results.append(_entry(obs, "delta_m_perpendicular", m2.perpendicular,
                                      "ClosedForm", si=si))
                ms = R.mass_single(sc.plate1, sc.area).parallel.value
                results.append(_entry(obs, "fd_ratio_to_single", mf.parallel.value / ms,
                                      "SubtractedQuadrature"))
            elif obs == "chi":
                om = w if w is not None else 0.0
                t = R.chi(om, sc, tol)
                q = Quantity(t.parallel, (0, -2, 1), Mode.Natural)
                results.append(_entry(obs, "chi_parallel", q, "SubtractedQuadrature"
                                      if sc.plate2 is not None else "ClosedForm",
                                      t.error_estimate, si=si))
            elif obs == "dissipation":
                if w is None:
                    raise ScenarioError("dissipation needs an oscillatory motion")
                amp = np.asarray(sc.motion.amplitude, dtype=complex)
                D = R.dissipation_rate({w: 0.5 * amp, -w: 0.5 * amp}, sc, tol)
                results.append(_entry(obs, "dissipated_power", D, "SubtractedQuadrature"
                                      if sc.plate2 is not None else "ClosedForm", si=si))
            elif obs == "josephson_dc":
                F = R.josephson_dc(sc, tol)
                Fs = R.static_lateral_force(sc, tol)
                results.append(_entry(obs, "force", F, "SubtractedQuadrature", si=si))
                results.append(_entry(obs, "force_line_sum", Fs, "SubtractedQuadrature", si=si))
            elif obs == "josephson_ac":
                fw = Quantity(R.josephson_ac_frequency(sc), FREQUENCY, Mode.Natural)
                amp = 0.5 * sc.area * K.a_minus(K.KernelPoint(sc.plate1.kmag, 0.0, sc.H),
                                                tol).value.real
                amp *= sc.plate1.d * sc.plate2.d * sc.plate1.kmag
                results.append(_entry(obs, "angular_frequency", fw, "ClosedForm", si=si))
                results.append(_entry(obs, "force_amplitude", Quantity(amp, FORCE, Mode.Natural),
                                      "SubtractedQuadrature", si=si))
            elif obs == "capillary":
                fl = doc["fluid"]
                Hf, sig = fl["H"], fl["sigma"]
                if doc.get("units", "si") == "si":
                    from .units import SURFACE_TENSION
                    sig = to_natural(Quantity(sig, SURFACE_TENSION, Mode.SI)).value
                c = S.capillary_corrections(Hf, sig)
                results.append(_entry(obs, "delta_rho", c.delta_rho, "Quadrature(B)", si=si))
                results.append(_entry(obs, "delta_sigma", c.delta_sigma, "Quadrature(B)", si=si))
                results.append(_entry(obs, "relative_speed_shift", c.relative_speed_shift,
                                      "Quadrature(B)"))
                results.append(_entry(obs, "B", c.B, "Quadrature"))
            elif obs == "casimir":
                st = doc["statics"]
                Hs, As = st["H"], st.get("area", 1.0)
                E, err = S.casimir_energy_per_area(Hs)
                results.append(_entry(obs, "energy_per_area", E, "Quadrature", err, si=si))
                results.append(_entry(obs, "energy_coefficient", E.value * Hs ** 3,
                                      "Quadrature", note="E H^3 / (hbar c)"))
                results.append(_entry(obs, "force", S.casimir_force(Hs, As), "ClosedForm", si=si))
        except (R.DivergentResponseError, K.DivergentRegionError) as exc:
            errors.append({"observable": obs, "type": "DivergentRegion", "message": str(exc),
                           "K": float(exc.info.K),
                           "growth_exponent": float(exc.info.growth_exponent)})
            status = max(status, EXIT_DIVERGENT)
    report = {
        "tool": "dyncasimir %s" % __version__,
        "scenario": doc.get("name", ""),
        "units": "si" if si else "natural (hbar = c = 1, length unit m)",
        "tolerance": tol,
        "results": results,
    }
    if errors:
        report["errors"] = errors
    return report, status


def cmd_scenario(args):
    doc = load_scenario(args.file)
    if args.tol is not None:
        doc["tolerance"] = _check_tol(args.tol)
    report, status = evaluate_scenario(doc, si=args.si)
    text = yaml.safe_dump(report, sort_keys=False)
    fh, close = _open_output(args.output)
    try:
        fh.write(text)
    finally:
        if close:
            fh.close()
    return status


# ---------------------------------------------------------------------------
# selftest

def selftest_checks(b_offset=0.0):
    """Oracle table: (name, measured, expected, tolerance, kind, passed)."""
    from .quad import integrate_semi_infinite
    pi = math.pi
    rows = []

    def add(name, measured, expected, tol, relative=False):
        d = abs(measured - expected)
        if relative:
            d /= abs(expected)
        rows.append((name, measured, expected, tol, "rel" if relative else "abs", d <= tol))

    B = K.b_constant().value + b_offset
    add("B constant", B, -0.452448, 1e-4)
    E, _ = S.casimir_energy_per_area(1.0)
    add("Casimir coefficient E H^3", E.value, -pi ** 2 / 720.0, 1e-6, True)
    r = integrate_semi_infinite(lambda s: np.sinc(s / pi), 0.0, 1.0, 1e-10, half_period=pi)
    add("int_0^inf sin(s)/s", r.value, pi / 2, 1e-8)
    add("A+ single (1, 0)", K.a_plus_single(1.0, 0.0).value.real, -1.0 / (360 * pi ** 2),
        1e-14, True)
    add("A+(0,0;1) = pi^2/120", K.a_plus(K.KernelPoint(0.0, 0.0, 1.0)).value.real,
        pi ** 2 / 120, 1e-9, True)
    add("A-(0,0;1) = pi^2/120", K.a_minus(K.KernelPoint(0.0, 0.0, 1.0)).value.real,
        pi ** 2 / 120, 1e-9, True)
    pl = R.CorrugatedPlate(0.1, (1.0, 0.0))
    sc = R.CavityScenario(pl)
    w = 1e-3
    add("single-plate mass from chi", R.chi(w, sc).parallel.real / w ** 2,
        R.mass_single(pl, 1.0).parallel.value, 1e-4, True)
    p = K.KernelPoint(0.0, 2.0, 1.0)
    add("A+ quadrature vs residues (0,2;1)", K.a_pm_residue_sum(p, "plus").value.real,
        K.a_plus(p).value.real, 1e-6)
    add("A- quadrature vs residues (0,2;1)", K.a_pm_residue_sum(p, "minus").value.real,
        K.a_minus(p).value.real, 1e-6)
    return rows


def cmd_selftest(args):
    t0 = time.time()
    rows = selftest_checks(getattr(args, "perturb_b", 0.0))
    out = sys.stdout
    out.write("%-36s %22s %22s %9s %4s %s\n" % ("oracle", "measured", "expected", "tol", "", "status"))
    for name, m, e, tol, kind, ok in rows:
        out.write("%-36s %22.15g %22.15g %9.1e %4s %s\n" % (name, m, e, tol, kind,
                                                          "PASS" if ok else "FAIL"))
    allok = all(r[-1] for r in rows)
    out.write("%d/%d oracles passed in %.2f s\n" % (sum(r[-1] for r in rows), len(rows),
                                                     time.time() - t0))
    return EXIT_OK if allok else EXIT_SELFTEST


# ---------------------------------------------------------------------------

def _default_jobs():
    v = os.environ.get(ENV_JOBS)
    if v is None:
        return 1
    try:
        n = int(v)
    except ValueError:
        raise ValidationError("%s must be an integer" % ENV_JOBS) from None
    if n < 1:
        raise ValidationError("%s must be >= 1" % ENV_JOBS)
    return n


def build_parser():
    ap = argparse.ArgumentParser(prog="dyncasimir", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version="dyncasimir %s" % __version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    common.add_argument("--si", action="store_true", help="SI units at the interface")

    sp = sub.add_parser("sweep", parents=[common], help="kernel values on a (q, omega) grid")
    sp.add_argument("--q", required=True, help="grid: 'a,b,c' or 'lin:start:stop:n'")
    sp.add_argument("--omega", required=True, help="grid: 'a,b,c' or 'lin:start:stop:n'")
    sp.add_argument("--H", default="1", help="plate separation (or 'inf')")
    sp.add_argument("--kernel", choices=["plus", "minus", "both"], default="both")
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--jobs", type=int, default=None)

    sc = sub.add_parser("scenario", parents=[common], help="observables from a scenario file")
    sc.add_argument("file")
    sc.add_argument("--tol", type=float, default=None)
    sc.add_argument("--jobs", type=int, default=None)

    rg = sub.add_parser("regions", parents=[common], help="region tags on an n x n grid")
    rg.add_argument("--H", default="1")
    rg.add_argument("--q-max", type=float, default=4.0)
    rg.add_argument("--omega-max", type=float, default=6.0)
    rg.add_argument("--n", type=int, default=41)

    st = sub.add_parser("selftest", help="run the oracle suite")
    st.add_argument("--perturb-b", type=float, default=0.0, help=argparse.SUPPRESS)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "jobs", 1) is None:
            args.jobs = _default_jobs()
        if getattr(args, "jobs", 1) < 1:
            raise ValidationError("--jobs must be >= 1")
        handler = {"sweep": cmd_sweep, "scenario": cmd_scenario, "regions": cmd_regions,
                   "selftest": cmd_selftest}[args.verb]
        return handler(args)
    except (ValidationError, ScenarioError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_VALIDATION
    except K.DivergentRegionError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_DIVERGENT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
