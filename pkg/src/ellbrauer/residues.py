"""Tame residues of quaternion symbol classes over Q(t).

For a place v of the t-line and nonzero f, g, the tame symbol

    d_v(f, g) = (-1)^(v(f)v(g)) * fbar^v(g) * gbar^v(f)   in  kappa*/kappa*^2,

with fbar, gbar the residues of the unit parts, detects whether the class
of the quaternion algebra (f, g) ramifies at v.  At a degree-1 place the
residue field is Q and the verdict is an explicit square class.  At higher
degree the residue field is a number field; the verdict is decided only
when parity or an evident rational square forces it, and is otherwise
reported as undetermined, never silently assumed trivial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactalg import Polynomial, RationalFunction, rat_is_square
from .funcfield import Place, places_of_support, reduced_unit, unit_part, valuation
from .squareclass import FieldMode, SquareClassVector, class_of

Pair = tuple[RationalFunction, RationalFunction]


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x)


class QtBrauerClass:
    """Formal F2 sum of quaternion symbols (f, g) with f, g in Q(t)*."""

    __slots__ = ("symbols",)

    def __init__(self, pairs: Iterable[tuple]) -> None:
        counts: dict[Pair, int] = {}
        for f, g in pairs:
            f, g = _as_rf(f), _as_rf(g)
            if f.is_zero() or g.is_zero():
                raise ValueError("quaternion symbols require nonzero entries")
            counts[(f, g)] = counts.get((f, g), 0) + 1
        kept = [pair for pair, n in counts.items() if n % 2]
        kept.sort(key=lambda fg: (fg[0].sort_key(), fg[1].sort_key()))
        self.symbols: tuple[Pair, ...] = tuple(kept)

    def __add__(self, other: "QtBrauerClass") -> "QtBrauerClass":
        if not isinstance(other, QtBrauerClass):
            return NotImplemented
        return QtBrauerClass(self.symbols + other.symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QtBrauerClass):
            return NotImplemented
        return self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(("QtBrauerClass", self.symbols))

    def is_zero(self) -> bool:
        return not self.symbols

    def support(self) -> list[Place]:
        entries: list[RationalFunction] = []
        for f, g in self.symbols:
            entries.append(f)
            entries.append(g)
        return places_of_support(entries)

    def __str__(self) -> str:
        if not self.symbols:
            return "0"
        return " + ".join(f"({f}, {g})" for f, g in self.symbols)


class Verdict(enum.Enum):
    TRIVIALLY_ONE = "trivially one"
    CLASS = "square class"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ResidueVerdict:
    place: Place
    kind: Verdict
    square_class: SquareClassVector | None = None

    def is_trivial(self) -> bool | None:
        """True/False when decided, None when the residue field defeats us."""
        if self.kind is Verdict.TRIVIALLY_ONE:
            return True
        if self.kind is Verdict.CLASS:
            return self.square_class.is_zero()
        return None

    def __str__(self) -> str:
        if self.kind is Verdict.CLASS:
            return f"class {self.square_class}"
        return self.kind.value


def tame_symbol(place: Place, f, g) -> ResidueVerdict:
    """Tame residue of the symbol (f, g) at a place of the t-line."""
    f, g = _as_rf(f), _as_rf(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("tame symbols require nonzero entries")
    vf, vg = valuation(place, f), valuation(place, g)
    if vf % 2 == 0 and vg % 2 == 0:
        # Every exponent in the defining product is even.
        return ResidueVerdict(place, Verdict.TRIVIALLY_ONE)
    if place.degree == 1:
        rf = unit_part(place, f).residue
        rg = unit_part(place, g).residue
        r = rf ** (vg % 2) * rg ** (vf % 2)
        if vf % 2 and vg % 2:
            r = -r
        return ResidueVerdict(
            place, Verdict.CLASS, class_of(r, FieldMode.RATIONALS_ONLY)
        )
    # Degree >= 2: residues live in a number field.  Reduce the product of
    # unit parts mod pi; a constant that is a square in Q is a square in
    # any residue field, which settles the verdict.  Anything else stays
    # open: a rational nonsquare may still become a square upstairs.
    fbar = reduced_unit(place, f)
    gbar = reduced_unit(place, g)
    prod = (fbar ** (vg % 2) * gbar ** (vf % 2)) % place.pi
    if vf % 2 and vg % 2:
        prod = -prod
    if prod.is_constant() and rat_is_square(prod.as_constant()):
        return ResidueVerdict(place, Verdict.TRIVIALLY_ONE)
    return ResidueVerdict(place, Verdict.UNDETERMINED)


def residue_of_class(cls: QtBrauerClass, place: Place) -> ResidueVerdict:
    """Combined residue of a formal symbol sum at one place."""
    parts = [tame_symbol(place, f, g) for f, g in cls.symbols]
    if any(p.kind is Verdict.UNDETERMINED for p in parts):
        return ResidueVerdict(place, Verdict.UNDETERMINED)
    classes = [p.square_class for p in parts if p.kind is Verdict.CLASS]
    if not classes:
        return ResidueVerdict(place, Verdict.TRIVIALLY_ONE)
    total = classes[0]
    for c in classes[1:]:
        total = total + c
    return ResidueVerdict(place, Verdict.CLASS, total)


@dataclass(frozen=True)
class UnramifiednessReport:
    """Residue verdicts over the support, with places elsewhere trivial."""

    verdicts: tuple[ResidueVerdict, ...]
    nonsupport_trivial: bool = True

    @property
    def overall(self) -> bool | None:
        """True if unramified everywhere, False if ramified, None if unknown."""
        ramified = any(v.is_trivial() is False for v in self.verdicts)
        if ramified:
            return False
        if any(v.is_trivial() is None for v in self.verdicts):
            return None
        return True

    def verdict_at(self, place: Place) -> ResidueVerdict:
        for v in self.verdicts:
            if v.place == place:
                return v
        return ResidueVerdict(place, Verdict.TRIVIALLY_ONE)


def check_unramified_P1(cls: QtBrauerClass) -> UnramifiednessReport:
    """Residues of the class at every place in its support.

    Outside the support both valuations vanish and every residue is
    trivially one, so the support verdicts decide unramifiedness over the
    whole t-line.
    """
    support = cls.support()
    verdicts = tuple(residue_of_class(cls, v) for v in support)
    return UnramifiednessReport(verdicts)
