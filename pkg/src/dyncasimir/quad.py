"""Adaptive quadrature and numerical residues.

``integrate`` is a globally adaptive 10/21-point Gauss-Kronrod scheme
(QUADPACK's QK21 pair and error heuristic) that evaluates the integrand
on many sub-intervals at once, so ``f`` must accept numpy arrays.

``integrate_semi_infinite`` either maps (a, inf) onto (0, 1) or, for
oscillatory integrands, sums segments between consecutive zeros of the
oscillating factor and accelerates the partial sums with Wynn's epsilon
algorithm.

``residue_numeric`` applies the trapezoidal rule on a small circle,
which converges geometrically for integrands analytic on an annulus.
"""
from dataclasses import dataclass

import math

import numpy as np

__all__ = [
    "QuadResult",
    "PoleIsolationError",
    "integrate",
    "integrate_semi_infinite",
    "residue_numeric",
    "wynn_epsilon",
    "MAX_DEPTH",
]

MAX_DEPTH = 60
MAX_INTERVALS = 4000
_EPS = np.finfo(float).eps

# QK21 abscissae (positive half, descending) and weights
_XGK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

# full 21-point node set on [-1, 1] and matching weight vectors
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG21 = np.zeros(21)
_gauss_pos = [1, 3, 5, 7, 9]          # indices into _XGK that are Gauss nodes
for _i, _j in enumerate(_gauss_pos):
    _WG21[_j] = _WG[_i]               # negative side
    _WG21[20 - _j] = _WG[_i]          # positive side


@dataclass(frozen=True)
class QuadResult:
    value: complex
    abs_error_estimate: float
    evaluations: int
    converged: bool

    def __iter__(self):
        yield self.value
        yield self.abs_error_estimate


class PoleIsolationError(ArithmeticError):
    """Contour estimates on two radii disagree: another singularity is near."""


def _qk21(f, a, b):
    """Kronrod value, error estimate and |f| integral on intervals a, b."""
    c = 0.5 * (a + b)
    hl = 0.5 * (b - a)
    x = c[:, None] + hl[:, None] * _NODES[None, :]
    fx = np.asarray(f(x.ravel())).reshape(x.shape)
    resk = hl * (fx @ _WK)
    resg = hl * (fx @ _WG21)
    resabs = np.abs(hl) * (np.abs(fx) @ _WK)
    mean = resk / (2.0 * hl)
    resasc = np.abs(hl) * (np.abs(fx - mean[:, None]) @ _WK)
    err = np.abs(resk - resg)
    with np.errstate(invalid="ignore", divide="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc > 0) & (err > 0), scaled, err)
    floor = 50.0 * _EPS * resabs
    err = np.where(resabs > np.finfo(float).tiny / (50 * _EPS),
                   np.maximum(err, floor), err)
    if not np.all(np.isfinite(resk)):
        err = np.where(np.isfinite(resk), err, np.inf)
    return resk, err


def integrate(f, a, b, rel_tol=1e-10, abs_tol=1e-14, max_intervals=MAX_INTERVALS):
    """Adaptive Gauss-Kronrod quadrature of ``f`` over [a, b].

    Returns a :class:`QuadResult`; ``converged`` is False when the error
    target was not met within ``max_intervals`` or the depth limit.
    """
    if not (rel_tol > 0 and abs_tol > 0):
        raise ValueError("tolerances must be positive")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("finite limits required; use integrate_semi_infinite")
    if not a < b:
        raise ValueError("need a < b")
    lo = np.array([float(a)])
    hi = np.array([float(b)])
    val, err = _qk21(f, lo, hi)
    depth = np.zeros(1, dtype=int)
    nev = 21
    while True:
        total = val.sum()
        etot = err.sum()
        tol = max(abs_tol, rel_tol * abs(total))
        if etot <= tol:
            return QuadResult(total, float(etot), nev, True)
        if lo.size >= max_intervals:
            break
        # bisect the largest-error intervals carrying half of the error
        order = np.argsort(err)[::-1]
        csum = np.cumsum(err[order])
        nsplit = int(np.searchsorted(csum, 0.5 * etot) + 1)
        nsplit = min(nsplit, max_intervals - lo.size, 256)
        pick = order[:nsplit]
        pick = pick[depth[pick] < MAX_DEPTH]
        if pick.size == 0:
            break
        mid = 0.5 * (lo[pick] + hi[pick])
        if np.any((mid <= lo[pick]) | (mid >= hi[pick])):
            pick = pick[(mid > lo[pick]) & (mid < hi[pick])]
            if pick.size == 0:
                break
            mid = 0.5 * (lo[pick] + hi[pick])
        nlo = np.concatenate([lo[pick], mid])
        nhi = np.concatenate([mid, hi[pick]])
        nval, nerr = _qk21(f, nlo, nhi)
        nev += 21 * nlo.size
        keep = np.ones(lo.size, dtype=bool)
        keep[pick] = False
        ndepth = np.concatenate([depth[pick] + 1, depth[pick] + 1])
        lo = np.concatenate([lo[keep], nlo])
        hi = np.concatenate([hi[keep], nhi])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])
        depth = np.concatenate([depth[keep], ndepth])
    return QuadResult(val.sum(), float(err.sum()), nev, False)


def wynn_epsilon(partial_sums):
    """Wynn epsilon extrapolation of a sequence of partial sums.

    Returns ``(estimate, error)`` where the error is the spread of the
    last three even-column estimates.
    """
    s = [complex(x) for x in partial_sums]
    n = len(s)
    if n < 3:
        return s[-1], abs(s[-1] - s[-2]) if n > 1 else np.inf
    prev = [0.0] * (n + 1)
    cur = list(s)
    best = []
    # column k holds eps_k; even columns approximate the limit
    for k in range(1, n):
        nxt = []
        for j in range(len(cur) - 1):
            d = cur[j + 1] - cur[j]
            if d == 0:
                nxt.append(np.inf if k % 2 else cur[j + 1])
                continue
            nxt.append(prev[j + 1] + 1.0 / d)
        prev, cur = cur, nxt
        if k % 2 == 0 and cur and np.isfinite(cur[-1]):
            best.append(cur[-1])
        if len(cur) < 2:
            break
    if not best:
        return s[-1], abs(s[-1] - s[-2])
    est = best[-1]
    cands = best[-3:] + [s[-1]]
    errs = [abs(est - c) for c in cands[:-1] if c is not est]
    spread = max(errs) if errs else abs(s[-1] - s[-2])
    return est, spread


def _real_if(x):
    return x.real if isinstance(x, complex) and x.imag == 0 else x


def integrate_semi_infinite(f, a, decay_scale, rel_tol=1e-10, abs_tol=1e-14,
                            half_period=None, origin=0.0, max_segments=20000,
                            accelerate_after=8):
    """Integrate ``f`` over (a, inf).

    Without ``half_period`` the substitution ``s = a + L t/(1-t)`` with
    ``L = decay_scale`` maps the range to (0, 1). With ``half_period`` the
    integral is split at ``origin + k*half_period`` (the zeros of the
    oscillating factor) and the partial sums are accelerated by Wynn's
    epsilon algorithm once more than ``accelerate_after`` segments have
    been summed.
    """
    if not decay_scale > 0:
        raise ValueError("decay_scale must be positive")
    if half_period is None or half_period > 50.0 * decay_scale:
        L = float(decay_scale)

        def mapped(t):
            u = 1.0 - t
            s = a + L * t / u
            with np.errstate(over="ignore", invalid="ignore"):
                v = np.asarray(f(s)) * (L / (u * u))
            return np.where(np.isfinite(v), v, 0.0)

        return integrate(mapped, 0.0, 1.0, rel_tol=rel_tol, abs_tol=abs_tol)

    P = float(half_period)
    k0 = np.floor((a - origin) / P) + 1
    edges_next = lambda k: origin + k * P
    left = float(a)
    k = k0
    sums = []
    total = 0.0
    err_sum = 0.0
    nev = 0
    small_run = 0
    est_hist = []
    seg_tol = 0.1 * rel_tol
    for n in range(max_segments):
        right = edges_next(k)
        r = integrate(f, left, right, rel_tol=seg_tol, abs_tol=0.1 * abs_tol)
        nev += r.evaluations
        if not r.converged:
            return QuadResult(_real_if(total + r.value), err_sum + r.abs_error_estimate,
                              nev, False)
        total = total + r.value
        err_sum += r.abs_error_estimate
        sums.append(total)
        tol = max(abs_tol, rel_tol * abs(total))
        if abs(r.value) < 0.01 * tol and n >= 2:
            small_run += 1
            if small_run >= 3:
                return QuadResult(_real_if(total), err_sum + 3 * abs(r.value), nev, True)
        else:
            small_run = 0
        if n + 1 > accelerate_after:
            est, spread = wynn_epsilon(sums[-40:])
            est_hist.append(est)
            if len(est_hist) >= 3:
                d = max(abs(est_hist[-1] - est_hist[-2]), abs(est_hist[-1] - est_hist[-3]))
                if d <= 0.5 * max(abs_tol, rel_tol * abs(est)):
                    return QuadResult(_real_if(est), err_sum + d + spread * 0, nev, True)
        left = right
        k += 1
    est = est_hist[-1] if est_hist else total
    return QuadResult(_real_if(est), err_sum + abs(sums[-1] - sums[-2]), nev, False)


def _circle(f, z0, r, n):
    th = 2.0 * np.pi * np.arange(n) / n
    e = np.exp(1j * th)
    v = np.asarray(f(z0 + r * e), dtype=complex)
    return r * np.mean(v * e), np.max(np.abs(v)) * r


def _trapezoid_residue(f, z0, r, order, rel_tol, nmax):
    n = max(32, 8 * int(order))
    prev, _ = _circle(f, z0, r, n)
    while n < nmax:
        n *= 2
        cur, scale = _circle(f, z0, r, n)
        if abs(cur - prev) <= rel_tol * abs(cur) + 1e-14 * scale:
            return cur, abs(cur - prev), scale
        prev = cur
    raise PoleIsolationError("trapezoid rule did not settle on r = %g" % r)


def residue_numeric(f, z0, pole_order_hint=1, radius=0.5, rel_tol=1e-10,
                    check=True, nmax=1 << 15, radius_rtol=1e-8):
    """Residue of ``f`` at ``z0`` from (1/2 pi i) times the circle integral.

    The number of nodes is doubled until consecutive estimates agree to
    ``rel_tol``. With ``check`` the computation is repeated on half the
    radius; a mismatch beyond ``radius_rtol`` raises PoleIsolationError.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    z0 = complex(z0)
    res, _, scale = _trapezoid_residue(f, z0, radius, pole_order_hint, rel_tol, nmax)
    if check:
        res2, _, scale2 = _trapezoid_residue(f, z0, 0.5 * radius, pole_order_hint,
                                             rel_tol, nmax)
        floor = 1e-13 * max(scale, scale2)
        if abs(res - res2) > radius_rtol * abs(res) + floor:
            raise PoleIsolationError(
                "residue at %s depends on radius: %r vs %r" % (z0, res, res2))
    return res
