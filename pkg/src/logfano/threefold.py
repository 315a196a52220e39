"""Lower bounds for delta invariants of threefold pairs via plane-curve data.

The bounds reduce a threefold computation to a plane one: the S-invariants of
a plane flag or of the exceptional plane of a point blowup have exact closed
forms, and the remaining infimum is controlled by the delta invariant of the
plane pair cut out by the flag (a hyperplane section for a smooth point, the
projectivized tangent cone for a singular one).  All three combinators return
certified lower bounds; a result >= 1 certifies K-stability of the
corresponding polarized pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delta import delta_point
from .exact import PiecewisePoly, Poly, integrate, integrate_piecewise, rat

F = Fraction


def s_plane_flag(s: int, lam) -> Fraction:
    """S of a general plane through a smooth point of a degree-s surface in P^3.

    Computed as the exact integral of (4 - lam*s - u)^3 over [0, 4 - lam*s],
    normalized by (4 - lam*s)^3, and cross-checked against the closed form
    (4 - lam*s)/4.
    """
    lam = rat(lam)
    b = 4 - lam * s
    if b <= 0:
        raise ValueError("need lambda * s < 4")
    integrand = Poly.of(b, -1) * Poly.of(b, -1) * Poly.of(b, -1)
    value = integrate(integrand, 0, b) / b**3
    closed = b / 4
    if value != closed:
        raise AssertionError("plane-flag integral disagrees with its closed form")
    return closed


def s_blowup_flag(s: int, lam) -> Fraction:
    """S of the exceptional plane of a point blowup of P^3, boundary degree s."""
    lam = rat(lam)
    b = 4 - lam * s
    if b <= 0:
        raise ValueError("need lambda * s < 4")
    integrand = Poly.of(b**3, 0, 0, -1)
    value = integrate(integrand, 0, b) / b**3
    closed = 3 * b / 4
    if value != closed:
        raise AssertionError("blowup-flag integral disagrees with its closed form")
    return closed


def delta_bound_smooth(s: int, lam, delta2d) -> Fraction:
    """Lower bound at a smooth surface point from a general plane flag."""
    lam, delta2d = rat(lam), rat(delta2d)
    if lam < 0 or lam * s >= 4:
        raise ValueError("need 0 <= lambda and lambda * s < 4")
    first = 4 / (4 - lam * s)
    second = delta2d * 4 * (3 - lam * s) / (3 * (4 - lam * s))
    return min(first, second)


def delta_bound_blowup(s: int, m: int, lam, delta2d) -> Fraction:
    """Lower bound at a point of multiplicity m from the point-blowup flag."""
    lam, delta2d = rat(lam), rat(delta2d)
    if m < 1:
        raise ValueError("need multiplicity m >= 1")
    if lam < 0 or lam * s >= 4:
        raise ValueError("need 0 <= lambda and lambda * s < 4")
    factor = 4 * (3 - lam * m) / (3 * (4 - lam * s))
    return min(factor, delta2d * factor)


def delta_bound_quadric(m: int, lam, delta2d) -> Fraction:
    """Lower bound on the quadric threefold with an anticanonical boundary."""
    lam, delta2d = rat(lam), rat(delta2d)
    if m < 1:
        raise ValueError("need multiplicity m >= 1")
    if lam < 0 or lam >= 1:
        raise ValueError("need 0 <= lambda < 1")
    first = (3 - lam * m) / (3 * (1 - lam))
    second = 4 * (3 - lam * m) / (15 - 9 * lam - 2 * lam * m)
    third = delta2d * 4 * (3 - lam * m) / (9 * (1 - lam))
    return min(first, second, third)


def verify_threefold_volumes(kind: str, params: dict, lam) -> bool:
    """Integrate the piecewise volume of the flag divisor and compare with the
    closed form of its S-invariant; exact equality or bust."""
    lam = rat(lam)
    if kind == "plane":
        s = params["s"]
        b = 4 - lam * s
        vol = PiecewisePoly((F(0), b), (Poly.of(b, -1) * Poly.of(b, -1) * Poly.of(b, -1),))
        return integrate_piecewise(vol) / b**3 == b / 4
    if kind == "blowup":
        s = params["s"]
        b = 4 - lam * s
        vol = PiecewisePoly((F(0), b), (Poly.of(b**3, 0, 0, -1),))
        return integrate_piecewise(vol) / b**3 == 3 * b / 4
    if kind == "quadric":
        a = 1 - lam
        if a <= 0:
            raise ValueError("need lambda < 1")
        first = Poly.of(54 * a**3, 0, 0, -1)
        shifted = Poly.of(6 * a, -1)
        second = shifted * shifted * shifted
        vol = PiecewisePoly((F(0), 3 * a, 6 * a), (first, second))
        return integrate_piecewise(vol) / (54 * a**3) == 3 * a
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class CorollaryConfig:
    """One threefold configuration whose bound certifies K-stability."""

    name: str
    kind: str  # "smooth" | "blowup" | "quadric"
    s: int | None
    m: int | None
    lam: Fraction
    cone_case: str
    cone_degree: int


# Tangent cones: a surface node is a smooth conic, an A_n (n >= 2) point a pair
# of lines, an ordinary triple point a smooth cubic (flex flag), an ordinary
# quadruple point a smooth quartic (flex flag).  Smooth points use a general
# plane section, whose tangent line meets it with multiplicity two.
COROLLARY_CONFIGS: tuple[CorollaryConfig, ...] = (
    CorollaryConfig("cubic surface, smooth point", "smooth", 3, None, F(2, 3), "smooth_cubic_tangent2", 3),
    CorollaryConfig("cubic surface, node", "blowup", 3, 2, F(2, 3), "smooth_conic", 2),
    CorollaryConfig("quartic double solid, smooth point", "smooth", 4, None, F(1, 2), "smooth_quartic_tangent2", 4),
    CorollaryConfig("quartic double solid, node", "blowup", 4, 2, F(1, 2), "smooth_conic", 2),
    CorollaryConfig("quartic double solid, A_n (n>=2) point", "blowup", 4, 2, F(1, 2), "A1", 2),
    CorollaryConfig("quartic double solid, ordinary triple point", "blowup", 4, 3, F(1, 2), "smooth_cubic_flex", 3),
    CorollaryConfig("quintic surface, node", "blowup", 5, 2, F(1, 2), "smooth_conic", 2),
    CorollaryConfig("quintic surface, A_n (n>=2) point", "blowup", 5, 2, F(1, 2), "A1", 2),
    CorollaryConfig("quintic surface, ordinary triple point", "blowup", 5, 3, F(1, 2), "smooth_cubic_flex", 3),
    CorollaryConfig("sextic double solid, node", "blowup", 6, 2, F(1, 2), "smooth_conic", 2),
    CorollaryConfig("sextic double solid, A_n (n>=2) point", "blowup", 6, 2, F(1, 2), "A1", 2),
    CorollaryConfig("sextic double solid, ordinary triple point", "blowup", 6, 3, F(1, 2), "smooth_cubic_flex", 3),
    CorollaryConfig("sextic double solid, ordinary quadruple point", "blowup", 6, 4, F(1, 2), "smooth_quartic_flex", 4),
    CorollaryConfig("quadric threefold section, node", "quadric", None, 2, F(2, 3), "smooth_conic", 2),
)


@dataclass(frozen=True)
class CorollaryResult:
    config: CorollaryConfig
    delta2d: Fraction
    delta2d_exact: bool
    bound: Fraction

    @property
    def certifies(self) -> bool:
        return self.bound >= 1

    @property
    def strict(self) -> bool:
        return self.bound > 1


def tangent_cone_delta(cone_case: str, cone_degree: int, lam) -> tuple[Fraction, bool]:
    """Delta of the plane pair cut out by the flag; falls back to the certified
    lower bound when the catalog value is not exact at this lambda."""
    report = delta_point(cone_case, cone_degree, lam)
    return report.value, report.exact


def evaluate_corollary(config: CorollaryConfig) -> CorollaryResult:
    delta2d, exact = tangent_cone_delta(config.cone_case, config.cone_degree, config.lam)
    if config.kind == "smooth":
        bound = delta_bound_smooth(config.s, config.lam, delta2d)
    elif config.kind == "blowup":
        bound = delta_bound_blowup(config.s, config.m, config.lam, delta2d)
    elif config.kind == "quadric":
        bound = delta_bound_quadric(config.m, config.lam, delta2d)
    else:
        raise ValueError(f"unknown kind {config.kind!r}")
    return CorollaryResult(config, delta2d, exact, bound)


def corollary_suite() -> list[CorollaryResult]:
    return [evaluate_corollary(config) for config in COROLLARY_CONFIGS]
