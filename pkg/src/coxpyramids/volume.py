"""Hyperbolic volumes of Coxeter pyramids.

The pyramid is the cone from the ideal apex over the part of the unit
hemisphere above its projected-link rectangle. Cutting the rectangle along
the coordinate axes gives (signed) quadrant rectangles ``[0, a] x [0, b]``,
each of whose cones splits into two orthotetrahedra with an ideal vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .geometry import PyramidQuadruple, projected_link

DEFAULT_LOB_EPS = 1e-12
DEFAULT_ORACLE_EPS = 1e-8

HALF_PI = 0.5 * math.pi


class QuadratureError(RuntimeError):
    pass


def lobachevsky(theta: float, eps: float = DEFAULT_LOB_EPS) -> float:
    """Lobachevsky function ``-int_0^theta log|2 sin t| dt`` to absolute error ``eps``."""
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    if eps <= 0:
        raise ValueError("eps must be positive")
    return _kernels.lobachevsky(theta, eps)


def ortho_tet_volume(theta: float, zeta: float, eps: float = DEFAULT_LOB_EPS) -> float:
    """Volume of the orthotetrahedron ``[theta, pi/2 - theta, zeta]`` with an ideal vertex."""
    if not (0.0 < theta < HALF_PI):
        raise ValueError(f"theta={theta} outside (0, pi/2)")
    if not (0.0 <= zeta < HALF_PI):
        raise ValueError(f"zeta={zeta} outside [0, pi/2)")
    L = lambda x: lobachevsky(x, eps)  # noqa: E731
    return 0.25 * (L(theta + zeta) + L(theta - zeta) + 2.0 * L(HALF_PI - theta))


def ortho_pyramid_volume(a: float, b: float, eps: float = DEFAULT_LOB_EPS) -> float:
    """Volume of the cone from infinity over the hemisphere above ``[0, a] x [0, b]``."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if a * a + b * b > 1.0 + 1e-15:
        raise ValueError(f"corner ({a}, {b}) lies outside the unit disk")
    if a == 0.0 or b == 0.0:
        return 0.0
    alpha = math.atan2(b, a)
    # cos(zeta) = b or a; clamp guards against a*a+b*b rounding just above 1
    return (ortho_tet_volume(HALF_PI - alpha, math.acos(min(b, 1.0)), eps)
            + ortho_tet_volume(alpha, math.acos(min(a, 1.0)), eps))


@dataclass(frozen=True)
class VolumePiece:
    corner: str
    sign: int
    a: float
    b: float
    value: float

    def to_json(self) -> dict:
        return {"corner": self.corner, "sign": self.sign, "a": self.a, "b": self.b, "value": self.value}


@dataclass(frozen=True)
class VolumeReport:
    quadruple: PyramidQuadruple
    pieces: tuple[VolumePiece, ...]
    total: float
    error_bound: float
    oracle: float | None = None
    oracle_error: float | None = None

    def to_json(self) -> dict:
        out = {
            "quadruple": list(self.quadruple),
            "pieces": [p.to_json() for p in self.pieces],
            "total": self.total,
            "error_bound": self.error_bound,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
            out["oracle_error"] = self.oracle_error
        return out


def _sgn(x: float) -> int:
    return (x > 0) - (x < 0)


def pyramid_volume(q, eps: float = DEFAULT_LOB_EPS, oracle: bool = False,
                   oracle_eps: float = DEFAULT_ORACLE_EPS) -> VolumeReport:
    """Volume by inclusion-exclusion of signed quadrant orthopyramids.

    With ``Phi(x, y) = sgn(x) sgn(y) V(|x|, |y|)`` the rectangle
    ``[x0, x1] x [y0, y1]`` has volume
    ``Phi(x1, y1) - Phi(x0, y1) - Phi(x1, y0) + Phi(x0, y0)``.
    """
    q = PyramidQuadruple(*q)
    link = projected_link(q)
    corners = (
        ("BC", +1, link.x_max, link.y_max),
        ("CD", -1, link.x_min, link.y_max),
        ("AB", -1, link.x_max, link.y_min),
        ("DA", +1, link.x_min, link.y_min),
    )
    pieces = []
    for tag, incl, x, y in corners:
        a, b = abs(x), abs(y)
        v = ortho_pyramid_volume(a, b, eps)
        if v < 0:
            raise AssertionError(f"negative orthopyramid volume {v} for {q} corner {tag}")
        sign = incl * _sgn(x) * _sgn(y)
        pieces.append(VolumePiece(tag, sign if v else 1, a, b, v))
    total = math.fsum(p.sign * p.value for p in pieces)
    # each orthopyramid uses 6 Lobachevsky values weighted by 1/4 or 1/2
    err = 4 * 2.0 * eps + 1e-14
    if total < -err:
        raise AssertionError(f"negative volume {total} for {q}")
    report = VolumeReport(q, tuple(pieces), max(total, 0.0), err)
    if oracle:
        val, oerr = volume_quadrature_oracle(q, oracle_eps, with_error=True)
        report = VolumeReport(q, report.pieces, report.total, err, val, oerr)
    return report


def volume_quadrature_oracle(q, eps: float = DEFAULT_ORACLE_EPS, max_panels: int = 200000,
                             with_error: bool = False):
    """Independent volume: integrate ``1 / (2 (1 - x^2 - y^2))`` over the projected link.

    That density is the hyperbolic volume of the vertical column above the
    unit hemisphere in the upper half-space model. Ideal corners make it
    singular but integrable; the adaptive cubature refines towards them.
    """
    if eps < 1e-12:
        raise ValueError("eps below 1e-12 is not attainable in double precision")
    link = projected_link(PyramidQuadruple(*q))
    value, err, leaves, converged = _kernels.quad_rect(
        link.x_min, link.x_max, link.y_min, link.y_max, eps, max_panels)
    if not converged:
        raise QuadratureError(f"cubature did not reach {eps:g} within {max_panels} panels (estimate {err:g})")
    return (value, err) if with_error else value
