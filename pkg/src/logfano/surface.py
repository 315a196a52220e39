"""Surface intersection model and exact Zariski decomposition.

A SurfaceModel is a finite lattice of named curve classes with a rational
intersection form, together with the pairings of a distinguished ambient class
(the pullback of the anticanonical polarization) against itself and against
each curve.  Divisor families D(v) have coefficients affine in the flag
parameter v, so all pairings are polynomials in v of degree at most 2 and the
whole decomposition is exact.

The decomposition follows a support-growth scheme: starting from an empty
negative part, solve (P(v) . C) = 0 for the support curves on each v-regime,
and let a new curve enter the support at the exact parameter value where its
pairing with the running positive part crosses zero.  The run ends where the
self-intersection of the positive part reaches zero (the pseudo-effective
threshold).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    PiecewisePoly,
    Poly,
    is_negative_definite,
    rat,
    rational_roots,
    roots_in_interval,
    solve_linear,
)


class ModelMismatch(ValueError):
    """Divisor expressions over different surface models were combined."""


class NotPseudoEffective(ValueError):
    """The divisor pairs negatively with a model curve already at v = 0."""


class IndefiniteSupport(ValueError):
    """A candidate negative-part support has a non negative-definite Gram matrix."""


class Unbounded(ValueError):
    """The volume never reaches zero on the probed range."""


@dataclass(frozen=True)
class SurfaceModel:
    """Named curve classes with their Gram matrix and ambient pairings."""

    curves: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    ambient_self: Fraction
    ambient_pairings: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        gram = tuple(tuple(rat(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "ambient_self", rat(self.ambient_self))
        object.__setattr__(self, "ambient_pairings", tuple(rat(x) for x in self.ambient_pairings))
        n = len(self.curves)
        if len(gram) != n or any(len(row) != n for row in gram):
            raise ValueError("gram matrix shape does not match curve count")
        if len(self.ambient_pairings) != n:
            raise ValueError("ambient pairing count does not match curve count")
        for i in range(n):
            for j in range(n):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")

    def index(self, name: str) -> int:
        try:
            return self.curves.index(name)
        except ValueError:
            raise KeyError(f"unknown curve {name!r}") from None

    def pairing(self, a: str, b: str) -> Fraction:
        return self.gram[self.index(a)][self.index(b)]


@dataclass(frozen=True)
class DivisorExpr:
    """ambient_coeff * (ambient class) + sum_i coeffs[i] * curves[i], affine in v."""

    model: SurfaceModel
    ambient: Poly
    coeffs: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(self.model.curves):
            raise ValueError("coefficient count does not match curve count")

    @classmethod
    def build(cls, model: SurfaceModel, ambient: Poly, coeffs: dict[str, Poly] | None = None) -> DivisorExpr:
        cs = [Poly() for _ in model.curves]
        for name, poly in (coeffs or {}).items():
            cs[model.index(name)] = poly
        return cls(model, ambient, tuple(cs))

    @classmethod
    def zero(cls, model: SurfaceModel) -> DivisorExpr:
        return cls(model, Poly(), tuple(Poly() for _ in model.curves))

    def __sub__(self, other: DivisorExpr) -> DivisorExpr:
        if self.model != other.model:
            raise ModelMismatch("divisors over different models")
        return DivisorExpr(
            self.model,
            self.ambient - other.ambient,
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def coeff(self, name: str) -> Poly:
        return self.coeffs[self.model.index(name)]

    def at(self, v: Fraction) -> dict[str, Fraction]:
        """Numeric coefficients at a parameter value (ambient under key ``""``)."""
        out = {"": self.ambient(v)}
        for name, c in zip(self.model.curves, self.coeffs):
            out[name] = c(v)
        return out


def pair(model: SurfaceModel, d1: DivisorExpr, d2: DivisorExpr) -> Poly:
    """Bilinear extension of the intersection table; a polynomial in v of degree <= 2."""
    if d1.model != model or d2.model != model:
        raise ModelMismatch("divisor expressions do not belong to the model")
    result = d1.ambient * d2.ambient * model.ambient_self
    for i, p in enumerate(model.ambient_pairings):
        if p != 0:
            result = result + (d1.ambient * d2.coeffs[i] + d2.ambient * d1.coeffs[i]) * p
    for i in range(len(model.curves)):
        for j in range(len(model.curves)):
            g = model.gram[i][j]
            if g != 0 and not d1.coeffs[i].is_zero and not d2.coeffs[j].is_zero:
                result = result + d1.coeffs[i] * d2.coeffs[j] * g
    if result.degree > 2:
        raise AssertionError("pairing of affine families must have degree <= 2")
    return result


@dataclass(frozen=True)
class ZariskiPieces:
    """Positive/negative parts of D(v) on [0, tau], one regime per piece."""

    model: SurfaceModel
    breakpoints: tuple[Fraction, ...]
    positives: tuple[DivisorExpr, ...]
    negatives: tuple[DivisorExpr, ...]
    supports: tuple[tuple[str, ...], ...]

    @property
    def tau(self) -> Fraction:
        return self.breakpoints[-1]

    def piece_index(self, v: Fraction) -> int:
        if v < 0 or v > self.tau:
            raise ValueError(f"{v} outside [0, {self.tau}]")
        for i in range(len(self.positives)):
            if v <= self.breakpoints[i + 1]:
                return i
        raise AssertionError("unreachable")

    def positive_at(self, v: Fraction) -> DivisorExpr:
        return self.positives[self.piece_index(v)]

    def negative_at(self, v: Fraction) -> DivisorExpr:
        return self.negatives[self.piece_index(v)]


def _solve_support(
    model: SurfaceModel, d: DivisorExpr, support: tuple[str, ...]
) -> tuple[DivisorExpr, DivisorExpr]:
    """Solve (P . C) = 0 for C in the support; N-coefficients come out affine in v."""
    if not support:
        return d, DivisorExpr.zero(model)
    idx = [model.index(name) for name in support]
    gram = [[model.gram[i][j] for j in idx] for i in idx]
    if not is_negative_definite(gram):
        raise IndefiniteSupport(f"support {support} has non negative-definite Gram matrix")
    rhs = [pair(model, d, _unit(model, name)) for name in support]
    if any(r.degree > 1 for r in rhs):
        raise AssertionError("support system must be affine in v")
    c0 = solve_linear(gram, [r.coeff(0) for r in rhs])
    c1 = solve_linear(gram, [r.coeff(1) for r in rhs])
    coeffs = {name: Poly.affine(c0[k], c1[k]) for k, name in enumerate(support)}
    n = DivisorExpr.build(model, Poly(), coeffs)
    return d - n, n


def _unit(model: SurfaceModel, name: str) -> DivisorExpr:
    return DivisorExpr.build(model, Poly(), {name: Poly.const(1)})


def _grow(model: SurfaceModel, d: DivisorExpr) -> ZariskiPieces:
    for name in model.curves:
        if pair(model, d, _unit(model, name))(0) < 0:
            raise NotPseudoEffective(f"D(0) pairs negatively with {name}")
    v = Fraction(0)
    support: tuple[str, ...] = ()
    breakpoints = [Fraction(0)]
    positives: list[DivisorExpr] = []
    negatives: list[DivisorExpr] = []
    supports: list[tuple[str, ...]] = []
    for _ in range(len(model.curves) + 1):
        p, n = _solve_support(model, d, support)
        # absorb curves whose pairing is already zero and strictly decreasing at v
        entering = [
            name
            for name in model.curves
            if name not in support
            and (f := pair(model, p, _unit(model, name)))(v) == 0
            and f.coeff(1) < 0
        ]
        if entering:
            support = support + tuple(entering)
            continue
        vol = pair(model, p, p)
        crossings: list[tuple[Fraction, str]] = []
        for name in model.curves:
            if name in support:
                continue
            f = pair(model, p, _unit(model, name))
            if f.degree == 1:
                root = -f.coeff(0) / f.coeff(1)
                if f.coeff(1) < 0 and root > v:
                    crossings.append((root, name))
        cross_v = min((r for r, _ in crossings), default=None)
        # volume roots matter only before the next support change; an irrational
        # root beyond it belongs to a regime with a different volume polynomial
        if cross_v is None:
            vol_hits = [r for r in rational_roots(vol) if r >= v]
            if not vol_hits:
                raise Unbounded("volume never reaches zero and no curve enters the support")
        else:
            vol_hits = roots_in_interval(vol, v, cross_v)
        if vol_hits:
            breakpoints.append(min(vol_hits))
            positives.append(p)
            negatives.append(n)
            supports.append(support)
            return ZariskiPieces(model, tuple(breakpoints), tuple(positives), tuple(negatives), tuple(supports))
        breakpoints.append(cross_v)
        positives.append(p)
        negatives.append(n)
        supports.append(support)
        support = support + tuple(name for r, name in crossings if r == cross_v)
        v = cross_v
    raise AssertionError("support grew beyond the curve count")


def pseudo_effective_threshold(model: SurfaceModel, d: DivisorExpr) -> Fraction:
    """Smallest v >= 0 at which the running volume (P(v))^2 reaches zero."""
    return _grow(model, d).tau


def zariski_decompose(model: SurfaceModel, d: DivisorExpr, v_max: Fraction) -> ZariskiPieces:
    """Full decomposition on [0, v_max]; v_max must equal the computed threshold."""
    pieces = _grow(model, d)
    if pieces.tau != rat(v_max):
        raise ValueError(f"v_max {v_max} != computed pseudo-effective threshold {pieces.tau}")
    return pieces


def volume_function(z: ZariskiPieces) -> PiecewisePoly:
    """v -> (P(v))^2 as an exact piecewise polynomial on [0, tau]."""
    return PiecewisePoly(z.breakpoints, tuple(pair(z.model, p, p) for p in z.positives))


def invariant_violations(z: ZariskiPieces, samples_per_piece: int = 5) -> list[str]:
    """Check the structural invariants of a decomposition; returns human-readable defects.

    Checked per piece: (P . C) = 0 identically on the support, (P . C) >= 0 for
    every model curve at sampled v, N-coefficients >= 0 and non-decreasing,
    support Gram negative definite; globally: volume continuity at breakpoints,
    monotone non-increasing volume, and volume zero at tau.
    """
    problems: list[str] = []
    model = z.model
    for i, (p, n, support) in enumerate(zip(z.positives, z.negatives, z.supports)):
        lo, hi = z.breakpoints[i], z.breakpoints[i + 1]
        vs = [lo + (hi - lo) * Fraction(k, samples_per_piece + 1) for k in range(1, samples_per_piece + 1)]
        for name in support:
            if not pair(model, p, _unit(model, name)).is_zero:
                problems.append(f"piece {i}: (P . {name}) not identically zero on support")
        for name in model.curves:
            f = pair(model, p, _unit(model, name))
            if any(f(v) < 0 for v in vs + [lo, hi]):
                problems.append(f"piece {i}: (P . {name}) negative on [{lo}, {hi}]")
        for name in support:
            c = n.coeff(name)
            if c(lo) < 0 or c(hi) < 0:
                problems.append(f"piece {i}: negative-part coefficient of {name} below zero")
            if c(hi) < c(lo):
                problems.append(f"piece {i}: negative-part coefficient of {name} decreasing")
        if support:
            idx = [model.index(name) for name in support]
            if not is_negative_definite([[model.gram[a][b] for b in idx] for a in idx]):
                problems.append(f"piece {i}: support Gram not negative definite")
    vol = volume_function(z)
    for i in range(1, len(z.breakpoints) - 1):
        b = z.breakpoints[i]
        if vol.pieces[i - 1](b) != vol.pieces[i](b):
            problems.append(f"volume discontinuous at {b}")
    prev = None
    for i, piece in enumerate(vol.pieces):
        lo, hi = z.breakpoints[i], z.breakpoints[i + 1]
        vs = [lo + (hi - lo) * Fraction(k, samples_per_piece) for k in range(samples_per_piece + 1)]
        for v in vs:
            val = piece(v)
            if prev is not None and val > prev:
                problems.append(f"volume increases near v = {v}")
            prev = val
    if vol.pieces[-1](z.tau) != 0:
        problems.append("volume nonzero at tau")
    return problems
