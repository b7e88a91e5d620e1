"""Places of the projective t-line over Q, valuations, and unit parts.

A finite place is a monic irreducible polynomial pi, with uniformizer pi
itself; the place at infinity has uniformizer 1/t.  The residue field at a
place of degree one is Q, and those are the only residue fields this
module evaluates in.  Places of higher degree still carry valuations and
unit parts, but their residues live in a number field and are reported as
polynomial representatives, never as rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exactalg import (
    Polynomial,
    RationalFunction,
    poly_extended_gcd,
    poly_factor,
)

FieldElement = Union[Polynomial, RationalFunction, Fraction, int]


class UnsupportedResidueFieldError(ValueError):
    """Raised when a rational residue is requested at a place of degree >= 2."""


@dataclass(frozen=True)
class Place:
    """A closed point of P^1 over Q: a monic irreducible pi, or infinity."""

    pi: Polynomial | None  # None marks the place at infinity

    @staticmethod
    def finite(pi: Polynomial) -> "Place":
        if pi.is_zero() or pi.degree < 1:
            raise ValueError("a finite place needs a nonconstant polynomial")
        if pi.leading() != 1:
            raise ValueError(f"{pi} is not monic")
        fac = poly_factor(pi)
        if len(fac.factors) != 1 or fac.factors[0][1] != 1:
            raise ValueError(f"{pi} is not irreducible over Q")
        return Place(pi)

    @staticmethod
    def at_rational(r: Fraction | int) -> "Place":
        return Place(Polynomial((-Fraction(r), 1)))

    @staticmethod
    def infinity() -> "Place":
        return Place(None)

    @property
    def is_infinite(self) -> bool:
        return self.pi is None

    @property
    def degree(self) -> int:
        return 1 if self.pi is None else self.pi.degree

    def sort_key(self) -> tuple:
        if self.pi is None:
            return (1,)
        return (0, self.pi.degree, self.pi.coeffs)

    def __str__(self) -> str:
        return "infinity" if self.pi is None else str(self.pi)


INFINITY = Place.infinity()


def _as_rf(f: FieldElement) -> RationalFunction:
    if isinstance(f, RationalFunction):
        return f
    return RationalFunction(f)


def _multiplicity(pi: Polynomial, poly: Polynomial) -> int:
    e = 0
    while True:
        q, r = divmod(poly, pi)
        if not r.is_zero():
            return e
        poly, e = q, e + 1


def valuation(place: Place, f: FieldElement) -> int:
    """Order of vanishing of a nonzero f at the place."""
    rf = _as_rf(f)
    if rf.is_zero():
        raise ValueError("the zero function has no valuation")
    if place.is_infinite:
        return rf.den.degree - rf.num.degree
    return _multiplicity(place.pi, rf.num) - _multiplicity(place.pi, rf.den)


@dataclass(frozen=True)
class UnitPart:
    """Valuation v and the residue of f * pi^(-v) in the residue field Q."""

    valuation: int
    residue: Fraction


def unit_part(place: Place, f: FieldElement) -> UnitPart:
    """Valuation and rational residue of the unit part, at a degree-1 place."""
    if place.degree != 1:
        raise UnsupportedResidueFieldError(
            f"residue field at {place} is a number field of degree "
            f"{place.degree}, not Q"
        )
    rf = _as_rf(f)
    if rf.is_zero():
        raise ValueError("the zero function has no unit part")
    if place.is_infinite:
        v = rf.den.degree - rf.num.degree
        return UnitPart(v, rf.num.leading() / rf.den.leading())
    v = valuation(place, rf)
    res = reduced_unit(place, rf)
    return UnitPart(v, res.as_constant())


def reduced_unit(place: Place, f: FieldElement) -> Polynomial:
    """Residue of the unit part at a finite place, as a poly of degree < deg pi.

    Computes f * pi^(-v) mod pi, inverting the denominator with the
    extended euclidean algorithm; pi irreducible makes the inverse exist.
    """
    if place.is_infinite:
        raise ValueError("reduced_unit applies to finite places")
    rf = _as_rf(f)
    if rf.is_zero():
        raise ValueError("the zero function has no unit part")
    pi = place.pi
    num, den = rf.num, rf.den
    vn, vd = _multiplicity(pi, num), _multiplicity(pi, den)
    num = num // pi**vn
    den = den // pi**vd
    nbar = num % pi
    dbar = den % pi
    _, inv, _ = poly_extended_gcd(dbar, pi)
    return (nbar * inv) % pi


def places_of_support(fs: Iterable[FieldElement]) -> list[Place]:
    """Sorted places where any of the given functions has nonzero valuation."""
    finite: set[Place] = set()
    include_infinity = False
    for f in fs:
        rf = _as_rf(f)
        if rf.is_zero():
            raise ValueError("the zero function has no support")
        for poly in (rf.num, rf.den):
            if poly.degree > 0:
                for base, _ in poly_factor(poly).factors:
                    finite.add(Place(base))
        if rf.den.degree != rf.num.degree:
            include_infinity = True
    out = sorted(finite, key=Place.sort_key)
    if include_infinity:
        out.append(INFINITY)
    return out
