"""Independent reference computations used only by the tests."""

import math

import mpmath
import numpy as np


def tits_matrices(order_matrix):
    """Reflection matrices of the geometric (Tits) representation; faithful for every Coxeter group."""
    n = len(order_matrix)
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            m = order_matrix[i][j]
            B[i, j] = -1.0 if m == 0 else -math.cos(math.pi / m)
    mats = []
    for s in range(n):
        M = np.eye(n)
        for t in range(n):
            M[s, t] -= 2.0 * B[s, t]
        mats.append(M)
    return mats


def word_length_counts(order_matrix, max_len):
    """a_0 .. a_max_len by breadth-first search over group elements (matrices, rounded)."""
    gens = tits_matrices(order_matrix)
    n = len(gens)
    key = lambda M: tuple(np.round(M, 8).ravel() + 0.0)  # noqa: E731
    seen = {key(np.eye(n))}
    frontier = [np.eye(n)]
    counts = [1]
    for _ in range(max_len):
        nxt = []
        for M in frontier:
            for G in gens:
                P = M @ G
                k = key(P)
                if k not in seen:
                    seen.add(k)
                    nxt.append(P)
        counts.append(len(nxt))
        frontier = nxt
    return counts


def cosine_matrix_min_eig(order_matrix):
    n = len(order_matrix)
    C = np.array([[1.0 if i == j else (-1.0 if order_matrix[i][j] == 0 else -math.cos(math.pi / order_matrix[i][j]))
                   for j in range(n)] for i in range(n)])
    return float(np.linalg.eigvalsh(C).min()) if n else 1.0


def lobachevsky_clausen(theta, dps=30):
    """L(theta) = Cl_2(2 theta) / 2 at high precision."""
    with mpmath.workdps(dps):
        return float(mpmath.clsin(2, 2 * mpmath.mpf(theta)) / 2)


def lobachevsky_integral(theta, dps=30):
    """The defining integral, split at the log singularities k*pi."""
    with mpmath.workdps(dps):
        th = mpmath.mpf(theta)
        pts = [mpmath.mpf(0)]
        k = 1
        while k * mpmath.pi < abs(th):
            pts.append(mpmath.sign(th) * k * mpmath.pi)
            k += 1
        pts.append(th)
        return float(-mpmath.quad(lambda t: mpmath.log(abs(2 * mpmath.sin(t))), pts))


def lobachevsky_fourier(theta, terms=200000):
    """Half the Fourier series sum sin(2 n theta) / n^2, tail below 1/(2 terms)."""
    n = np.arange(1, terms + 1, dtype=float)
    return 0.5 * float(np.sum(np.sin(2 * n * theta) / n**2))


def rect(q):
    """Projected-link rectangle of the cyclic label sequence (A, B, C, D) = (k, m, l, n)."""
    k, l, m, n = q
    c = lambda x: math.cos(math.pi / x)  # noqa: E731
    return (-c(n), c(m), -c(k), c(l))


def square_symmetries():
    """The 8 orthogonal maps of the plane preserving the axes, as 2x2 matrices."""
    out = []
    for swap in (False, True):
        for sx in (1, -1):
            for sy in (1, -1):
                M = np.array([[0, 1], [1, 0]]) if swap else np.eye(2)
                out.append(np.diag([sx, sy]) @ M)
    return out


def contained_up_to_isometry(q1, q2, tol=1e-12):
    """Geometric containment of projected links after some symmetry of the square."""
    x0, x1, y0, y1 = rect(q1)
    X0, X1, Y0, Y1 = rect(q2)
    corners = np.array([[x0, y0], [x0, y1], [x1, y0], [x1, y1]])
    for M in square_symmetries():
        img = corners @ M.T
        if (img[:, 0].min() >= X0 - tol and img[:, 0].max() <= X1 + tol
                and img[:, 1].min() >= Y0 - tol and img[:, 1].max() <= Y1 + tol):
            return True
    return False
