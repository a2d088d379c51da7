"""Hyperbolic Coxeter pyramids in dimension 3.

Enumeration, exact growth functions, certified growth rates, volumes and the
containment order.
"""

__version__ = "0.1.0"

from .coxeter import (  # noqa: E402
    CoxeterDiagram,
    finite_parabolic_family,
    pyramid_diagram,
    recognize_finite_type,
    solomon_growth,
)
from .exactpoly import IntPolynomial, RationalFunction, bracket, series_coefficients  # noqa: E402
from .geometry import PyramidQuadruple, canonicalize, enumerate_pyramids, projected_link  # noqa: E402
from .growth import growth_report, perron_certificate, steinberg_growth  # noqa: E402
from .order import build_order, leq, monotonicity_report  # noqa: E402
from .volume import lobachevsky, pyramid_volume, volume_quadrature_oracle  # noqa: E402

__all__ = [
    "CoxeterDiagram", "IntPolynomial", "PyramidQuadruple", "RationalFunction",
    "bracket", "build_order", "canonicalize", "enumerate_pyramids", "finite_parabolic_family",
    "growth_report", "leq", "lobachevsky", "monotonicity_report", "perron_certificate",
    "projected_link", "pyramid_diagram", "pyramid_volume", "recognize_finite_type",
    "series_coefficients", "solomon_growth", "steinberg_growth", "volume_quadrature_oracle",
]
