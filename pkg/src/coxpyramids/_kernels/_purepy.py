"""Pure-Python kernels; same algorithms and signatures as ``_speedups``."""

import heapq
import math

from .constants import GAUSS_NODES, GAUSS_WEIGHTS, LOB_COEFFS

PI = math.pi
HALF_PI = 0.5 * math.pi


def lobachevsky(theta, eps=1e-12):
    t = math.fmod(theta, PI)
    if t < 0.0:
        t += PI
    sign = 1.0
    if t > HALF_PI:
        t = PI - t
        sign = -1.0
    if t == 0.0:
        return 0.0
    total = t - t * math.log(2.0 * t)
    t2 = t * t
    power = t
    stop = 0.25 * eps
    for c in LOB_COEFFS:
        power *= t2
        term = c * power
        total += term
        # tail ratio is at most (t/pi)^2 <= 1/4
        if term <= stop:
            break
    return sign * total


def _integrand(x, y):
    return 0.5 / (1.0 - x * x - y * y)


def _panel(x0, x1, y0, y1):
    hx = 0.5 * (x1 - x0)
    hy = 0.5 * (y1 - y0)
    cx = x0 + hx
    cy = y0 + hy
    s = 0.0
    for xi, wi in zip(GAUSS_NODES, GAUSS_WEIGHTS):
        x = cx + hx * xi
        r = 1.0 - x * x
        inner = 0.0
        for yj, wj in zip(GAUSS_NODES, GAUSS_WEIGHTS):
            y = cy + hy * yj
            inner += wj / (r - y * y)
        s += wi * inner
    return 0.5 * s * hx * hy


def _refine_boxes(x0, x1, y0, y1):
    xm = 0.5 * (x0 + x1)
    ym = 0.5 * (y0 + y1)
    return ((x0, xm, y0, ym), (xm, x1, y0, ym), (x0, xm, ym, y1), (xm, x1, ym, y1)), None


def _refine(x0, x1, y0, y1):
    kids, _ = _refine_boxes(x0, x1, y0, y1)
    return kids, tuple(_panel(*k) for k in kids)


def quad_rect(x0, x1, y0, y1, tol=1e-8, max_panels=200000):
    """Globally adaptive 8x8 Gauss-Legendre cubature of 1/(2(1-x^2-y^2)).

    Each leaf carries its own estimate and the sum over its four quadrants;
    the leaf with the largest discrepancy is split until the summed
    discrepancy drops below ``tol``. Returns
    ``(value, error_estimate, leaves, converged)``.
    """
    if x1 <= x0 or y1 <= y0:
        return 0.0, 0.0, 0, True
    coarse = _panel(x0, x1, y0, y1)
    kids, vals = _refine(x0, x1, y0, y1)
    fine = vals[0] + vals[1] + vals[2] + vals[3]
    err = abs(fine - coarse)
    heap = [(-err, 0, x0, x1, y0, y1, fine, vals)]
    counter = 1
    err_total = err
    while err_total > tol and len(heap) < max_panels:
        neg_err, _, a0, a1, b0, b1, _f, kidvals = heapq.heappop(heap)
        err_total += neg_err
        kids, _ = _refine_boxes(a0, a1, b0, b1)
        for (c0, c1, d0, d1), v in zip(kids, kidvals):
            _, sub = _refine(c0, c1, d0, d1)
            f = sub[0] + sub[1] + sub[2] + sub[3]
            e = abs(f - v)
            heapq.heappush(heap, (-e, counter, c0, c1, d0, d1, f, sub))
            counter += 1
            err_total += e
    value = math.fsum(item[6] for item in heap)
    err = math.fsum(-item[0] for item in heap)
    return value, err, len(heap), err <= tol
