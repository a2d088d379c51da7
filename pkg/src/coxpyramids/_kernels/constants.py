"""Tables shared by the compiled and pure-Python kernels."""

from fractions import Fraction
from math import comb, factorial

import numpy as np

N_LOB_TERMS = 40
GAUSS_ORDER = 8


def bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0 .. B_n (convention B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def lobachevsky_coefficients(count: int = N_LOB_TERMS) -> list[float]:
    """c_k with  L(x) = x - x log(2x) + sum_k c_k x^(2k+1)  for 0 <= x < pi.

    Integrates the Taylor series of -log(sin t / t).
    """
    b = bernoulli_numbers(2 * count)
    out = []
    for k in range(1, count + 1):
        c = Fraction(2 ** (2 * k - 1)) * abs(b[2 * k]) / (k * factorial(2 * k) * (2 * k + 1))
        out.append(float(c))
    return out


LOB_COEFFS = lobachevsky_coefficients()
_nodes, _weights = np.polynomial.legendre.leggauss(GAUSS_ORDER)
GAUSS_NODES = [float(x) for x in _nodes]
GAUSS_WEIGHTS = [float(w) for w in _weights]
