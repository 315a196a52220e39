"""Shared helpers: a float midpoint-quadrature oracle for exact integrals."""

from __future__ import annotations

import numpy as np

from logfano.exact import PiecewisePoly, Poly


def midpoint_poly(p: Poly, a, b, panels: int = 10**6) -> float:
    """Midpoint-rule integral of a polynomial with float arithmetic."""
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    h = (b - a) / panels
    x = np.linspace(a + h / 2, b - h / 2, panels)
    acc = np.zeros_like(x)
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return float(acc.sum() * h)


def midpoint_piecewise(f: PiecewisePoly, panels: int = 10**6) -> float:
    total = 0.0
    for i, p in enumerate(f.pieces):
        total += midpoint_poly(p, f.breakpoints[i], f.breakpoints[i + 1], panels)
    return total


def rel_err(exact, approx) -> float:
    exact = float(exact)
    if exact == 0.0:
        return abs(approx)
    return abs(approx - exact) / abs(exact)
