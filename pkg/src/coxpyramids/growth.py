"""Growth functions via Steinberg's formula, growth rates and Perron certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import reduce

import numpy as np

from .coxeter import CoxeterDiagram, finite_parabolic_family, pyramid_diagram, solomon_growth
from .exactpoly import (
    IntPolynomial,
    RationalFunction,
    reciprocal_transform,
    rf_combine,
)
from .geometry import PyramidQuadruple

DEFAULT_ROOT_EPS = Fraction(1, 2**40)
DEFAULT_J_MAX = 5

T_MINUS_1 = IntPolynomial((-1, 1))
T_PLUS_1 = IntPolynomial((1, 1))


class FiniteGroupError(ValueError):
    """Steinberg's formula was asked for a finite Coxeter group."""


def steinberg_growth(d: CoxeterDiagram) -> RationalFunction:
    """Growth function ``P/Q`` of an infinite Coxeter system, reduced."""
    family = finite_parabolic_family(d)
    if len(family) == 2 ** d.rank:
        raise FiniteGroupError("every parabolic subgroup is finite; use solomon_growth instead")
    terms = [((-1) ** len(s), RationalFunction(1, solomon_growth(ft))) for s, ft in family]
    return reciprocal_transform(rf_combine(terms))


def growth_function(q) -> RationalFunction:
    """Growth function of the reflection group of pyramid ``q``, with ``P(0) = Q(0) = 1``."""
    f = steinberg_growth(pyramid_diagram(q))
    if f.den[0] < 0:
        # canonical form fixes lead(den) > 0; pyramids also have den(0) = 1
        raise ArithmeticError(f"unexpected sign normalization for {q}: {f}")
    return f


def denominator_split(Q: IntPolynomial) -> IntPolynomial:
    """``g`` with ``Q = +-(t - 1) g`` and ``g(0) = -1``."""
    if Q(1) != 0:
        raise ValueError(f"denominator does not vanish at t = 1: {Q.to_text()}")
    g = Q.divexact(T_MINUS_1)
    if g[0] > 0:
        g = -g
    if g[0] != -1:
        raise ValueError(f"g(0) = {g[0]}, expected -1 up to sign")
    return g


@dataclass(frozen=True)
class PerronCertificate:
    """``(t+1)^j g(t) = sum(b_k t^k) - 1`` with ``b_k >= 0`` and gcd of the support 1."""

    multiplier_power: int
    h_coeffs: tuple[int, ...]  # b_0 = 0, b_1, ..., b_n
    support_gcd: int

    @property
    def support(self) -> list[int]:
        return [k for k, b in enumerate(self.h_coeffs) if b]

    def expanded(self) -> IntPolynomial:
        """``(t+1)^j g(t)`` recovered from the certificate."""
        return IntPolynomial(self.h_coeffs) - 1

    def check(self, g: IntPolynomial) -> bool:
        prod = T_PLUS_1 ** self.multiplier_power * g
        b = self.h_coeffs
        return (
            prod == self.expanded()
            and b[0] == 0
            and all(x >= 0 for x in b)
            and reduce(gcd, self.support, 0) == self.support_gcd == 1
        )


def perron_certificate(g: IntPolynomial, j_max: int = DEFAULT_J_MAX) -> PerronCertificate | None:
    """Smallest ``j <= j_max`` putting ``(t+1)^j g`` in Perron form, else ``None``."""
    if g[0] != -1:
        raise ValueError("g(0) must be -1")
    p = g
    for j in range(j_max + 1):
        if j:
            p = p * T_PLUS_1
        b = (0,) + p.coeffs[1:]
        if p[0] == -1 and all(x >= 0 for x in b):
            support = [k for k, x in enumerate(b) if x]
            d = reduce(gcd, support, 0)
            if d == 1:
                return PerronCertificate(j, b, d)
    return None


@dataclass(frozen=True)
class RootBracket:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass(frozen=True)
class GrowthRate:
    r1: RootBracket
    tau: float
    tau_error: float  # upper bound on |tau - 1/r1|
    tau_lo: Fraction
    tau_hi: Fraction


def growth_rate(g: IntPolynomial, cert: PerronCertificate, eps: Fraction = DEFAULT_ROOT_EPS) -> GrowthRate:
    """Bisect ``(t+1)^j g`` on (0, 1) down to a bracket of width <= ``eps``.

    The certificate makes ``h = (t+1)^j g + 1`` strictly increasing on (0, 1)
    with ``h(0) = 0``, so the sign test is unconditionally correct.
    """
    if not cert.check(g):
        raise ValueError("certificate does not match g")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    p = cert.expanded()
    lo, hi = Fraction(0), Fraction(1)
    if not (p(lo) < 0 < p(hi)):
        raise ValueError("no sign change of g on (0, 1)")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            lo = hi = mid
            break
        if v < 0:
            lo = mid
        else:
            hi = mid
    bracket_ = RootBracket(lo, hi)
    tau_exact = 1 / bracket_.mid
    tau_hi = 1 / lo if lo else Fraction(10**18)
    tau_lo = 1 / hi
    err = max(tau_hi - tau_exact, tau_exact - tau_lo)
    tau = float(tau_exact)
    # account for rounding tau to a double
    err_f = float(err) + abs(float(Fraction(tau) - tau_exact)) + 1e-300
    return GrowthRate(bracket_, tau, err_f, tau_lo, tau_hi)


class RootFindingError(RuntimeError):
    pass


def aberth_roots(coeffs, tol: float = 1e-14, max_iter: int = 500) -> np.ndarray:
    """All complex roots of an ascending-coefficient polynomial by Aberth-Ehrlich iteration."""
    c = np.asarray(coeffs, dtype=float)
    while c.size and c[-1] == 0:
        c = c[:-1]
    n = c.size - 1
    if n < 1:
        return np.empty(0, dtype=complex)
    desc = c[::-1] / c[-1]
    ddesc = np.polyder(desc)
    # initial points on a circle bounded by the Cauchy radius, off-axis to break symmetry
    radius = 1 + np.max(np.abs(desc[1:]))
    z = 0.5 * radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    for _ in range(max_iter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        ratio = pz / dpz
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        w = ratio / (1 - ratio * inv.sum(axis=1))
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            return z
    raise RootFindingError(
        f"Aberth iteration did not converge in {max_iter} steps; retry with higher precision"
    )


def numeric_root_check(g: IntPolynomial, r1: float, tol: float = 1e-8) -> bool:
    """True iff ``r1`` is a simple root of ``g`` strictly smaller in modulus than all others."""
    roots = aberth_roots(g.coeffs)
    desc = np.asarray(g.coeffs[::-1], dtype=float)
    scale = np.polyval(np.abs(desc), np.abs(roots)) + 1.0
    if np.max(np.abs(np.polyval(desc, roots)) / scale) > 1e-10:
        raise RootFindingError("residual above 1e-10; retry with higher precision")
    near = np.abs(roots - r1) <= tol
    if near.sum() != 1:
        return False
    return bool(np.all(np.abs(roots[~near]) > r1 + tol))


@dataclass(frozen=True)
class GrowthReport:
    quadruple: PyramidQuadruple
    f: RationalFunction
    g: IntPolynomial
    perron: PerronCertificate | None
    rate: GrowthRate | None
    numeric_check: bool | None = field(default=None)

    @property
    def tau(self) -> float:
        return self.rate.tau

    def to_json(self) -> dict:
        out = {
            "quadruple": list(self.quadruple),
            "numerator": self.f.num.to_list(),
            "denominator": self.f.den.to_list(),
            "denominator_text": f"(t - 1) * ({self.g.to_text()})",
            "g": self.g.to_list(),
            "perron": None,
        }
        if self.perron is not None:
            out["perron"] = {
                "j": self.perron.multiplier_power,
                "h_coeffs": list(self.perron.h_coeffs),
                "support_gcd": self.perron.support_gcd,
            }
        if self.rate is not None:
            r = self.rate
            out["r1_interval"] = [_dec(r.r1.lo), _dec(r.r1.hi)]
            out["r1_interval_exact"] = [str(r.r1.lo), str(r.r1.hi)]
            out["tau"] = f"{r.tau:.15g}"
            out["tau_error_bound"] = f"{r.tau_error:.3e}"
        if self.numeric_check is not None:
            out["numeric_root_check"] = self.numeric_check
        return out


def _dec(x: Fraction, digits: int = 20) -> str:
    """Exact decimal string of a dyadic rational, truncated to ``digits`` places if longer."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    frac = []
    for _ in range(digits):
        if not rem:
            break
        rem *= 10
        d, rem = divmod(rem, x.denominator)
        frac.append(str(d))
    return f"{sign}{whole}." + ("".join(frac) or "0")


def growth_report(q, eps: Fraction = DEFAULT_ROOT_EPS, j_max: int = DEFAULT_J_MAX,
                  numeric: bool = False) -> GrowthReport:
    q = PyramidQuadruple(*q)
    f = growth_function(q)
    g = denominator_split(f.den)
    cert = perron_certificate(g, j_max)
    rate = growth_rate(g, cert, eps) if cert is not None else None
    check = None
    if numeric and rate is not None:
        check = numeric_root_check(g, float(rate.r1.mid))
    return GrowthReport(q, f, g, cert, rate, check)
