# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Lobachevsky series and adaptive cubature of the volume density."""

import heapq
import math

from libc.math cimport fmod, log, fabs, M_PI

from .constants import GAUSS_NODES, GAUSS_WEIGHTS, LOB_COEFFS, GAUSS_ORDER, N_LOB_TERMS

cdef double _lob[64]
cdef double _gx[64]
cdef double _gw[64]
cdef int _nlob = N_LOB_TERMS
cdef int _ng = GAUSS_ORDER

for _i in range(_nlob):
    _lob[_i] = LOB_COEFFS[_i]
for _i in range(_ng):
    _gx[_i] = GAUSS_NODES[_i]
    _gw[_i] = GAUSS_WEIGHTS[_i]


cdef double _lobachevsky(double theta, double eps) nogil:
    cdef double t = fmod(theta, M_PI)
    cdef double sign = 1.0
    cdef double total, t2, power, term, stop
    cdef int k
    if t < 0.0:
        t += M_PI
    if t > 0.5 * M_PI:
        t = M_PI - t
        sign = -1.0
    if t == 0.0:
        return 0.0
    total = t - t * log(2.0 * t)
    t2 = t * t
    power = t
    stop = 0.25 * eps
    for k in range(_nlob):
        power *= t2
        term = _lob[k] * power
        total += term
        if term <= stop:
            break
    return sign * total


def lobachevsky(double theta, double eps=1e-12):
    return _lobachevsky(theta, eps)


cdef double _panel(double x0, double x1, double y0, double y1) nogil:
    cdef double hx = 0.5 * (x1 - x0)
    cdef double hy = 0.5 * (y1 - y0)
    cdef double cx = x0 + hx
    cdef double cy = y0 + hy
    cdef double s = 0.0, inner, x, y, r
    cdef int i, j
    for i in range(_ng):
        x = cx + hx * _gx[i]
        r = 1.0 - x * x
        inner = 0.0
        for j in range(_ng):
            y = cy + hy * _gx[j]
            inner += _gw[j] / (r - y * y)
        s += _gw[i] * inner
    return 0.5 * s * hx * hy


cdef tuple _refine(double x0, double x1, double y0, double y1):
    cdef double xm = 0.5 * (x0 + x1)
    cdef double ym = 0.5 * (y0 + y1)
    return (_panel(x0, xm, y0, ym), _panel(xm, x1, y0, ym),
            _panel(x0, xm, ym, y1), _panel(xm, x1, ym, y1))


def quad_rect(double x0, double x1, double y0, double y1, double tol=1e-8, int max_panels=200000):
    """Globally adaptive 8x8 Gauss-Legendre cubature of 1/(2(1-x^2-y^2)).

    Returns ``(value, error_estimate, leaves, converged)``.
    """
    cdef double coarse, fine, err, err_total, xm, ym, v, f, e
    cdef double a0, a1, b0, b1
    cdef long counter = 1
    cdef tuple vals, sub, kidvals, boxes
    cdef int i
    if x1 <= x0 or y1 <= y0:
        return 0.0, 0.0, 0, True
    coarse = _panel(x0, x1, y0, y1)
    vals = _refine(x0, x1, y0, y1)
    fine = vals[0] + vals[1] + vals[2] + vals[3]
    err = fabs(fine - coarse)
    heap = [(-err, 0, x0, x1, y0, y1, fine, vals)]
    err_total = err
    while err_total > tol and len(heap) < max_panels:
        item = heapq.heappop(heap)
        err_total += item[0]
        a0, a1, b0, b1 = item[2], item[3], item[4], item[5]
        kidvals = item[7]
        xm = 0.5 * (a0 + a1)
        ym = 0.5 * (b0 + b1)
        boxes = ((a0, xm, b0, ym), (xm, a1, b0, ym), (a0, xm, ym, b1), (xm, a1, ym, b1))
        for i in range(4):
            c0, c1, d0, d1 = boxes[i]
            v = kidvals[i]
            sub = _refine(c0, c1, d0, d1)
            f = sub[0] + sub[1] + sub[2] + sub[3]
            e = fabs(f - v)
            heapq.heappush(heap, (-e, counter, c0, c1, d0, d1, f, sub))
            counter += 1
            err_total += e
    value = math.fsum([it[6] for it in heap])
    err = math.fsum([-it[0] for it in heap])
    return value, err, len(heap), err <= tol
