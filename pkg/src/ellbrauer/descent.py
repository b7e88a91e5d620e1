"""Two-descent on split curves y^2 = x (x - p) (x - q) over Q(t).

The mod-2 descent sequence ties three maps together: the connecting map
sends a point M to the square-class pair (x(M) - q, x(M) - p), and the
pair (f, g) maps onward to the Brauer class (x - p, f) + (x - q, g).  The
image of the first map is exactly the kernel of the second.  The ordering
of the pair components is part of the convention and is locked in by the
evaluation-level exactness tests; do not swap it.

At the three finite 2-torsion points one coordinate vanishes, and the
usual representative is replaced through y^2 = x (x - p) (x - q): the pair
for (p, 0) is (p - q, p (p - q)), the pair for (q, 0) is (q (q - p), q - p),
and (0, 0) is handled through the group law as the sum of the other two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .exactalg import RationalFunction
from .elliptic import WeierstrassCurve
from .squareclass import (
    FieldMode,
    SquareClassVector,
    class_of,
    in_span,
    independent,
)


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x)


class PointKind(enum.Enum):
    ZERO = "zero"
    TWO_TORSION_P = "(p, 0)"
    TWO_TORSION_Q = "(q, 0)"
    TWO_TORSION_ORIGIN = "(0, 0)"
    AFFINE = "affine"


@dataclass(frozen=True)
class CurvePoint:
    """A point of the generic fiber, with coordinates in Q(t) when affine."""

    kind: PointKind
    x: RationalFunction | None = None
    y: RationalFunction | None = None

    @staticmethod
    def zero() -> "CurvePoint":
        return CurvePoint(PointKind.ZERO)

    @staticmethod
    def two_torsion_p() -> "CurvePoint":
        return CurvePoint(PointKind.TWO_TORSION_P)

    @staticmethod
    def two_torsion_q() -> "CurvePoint":
        return CurvePoint(PointKind.TWO_TORSION_Q)

    @staticmethod
    def two_torsion_origin() -> "CurvePoint":
        return CurvePoint(PointKind.TWO_TORSION_ORIGIN)

    @staticmethod
    def affine(x, y) -> "CurvePoint":
        return CurvePoint(PointKind.AFFINE, _as_rf(x), _as_rf(y))

    def __str__(self) -> str:
        if self.kind is PointKind.AFFINE:
            return f"({self.x}, {self.y})"
        return self.kind.value


@dataclass(frozen=True)
class DescentPair:
    """Pair of square classes, one per coordinate of the descent map."""

    first: SquareClassVector
    second: SquareClassVector

    def __post_init__(self) -> None:
        if self.first.mode is not self.second.mode:
            raise ValueError("descent pair components must share a field mode")

    @property
    def mode(self) -> FieldMode:
        return self.first.mode

    def as_tuple(self) -> tuple[SquareClassVector, SquareClassVector]:
        return (self.first, self.second)

    def __add__(self, other: "DescentPair") -> "DescentPair":
        if not isinstance(other, DescentPair):
            return NotImplemented
        return DescentPair(self.first + other.first, self.second + other.second)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def _require_split(curve: WeierstrassCurve) -> tuple[RationalFunction, RationalFunction]:
    if not curve.is_split:
        raise ValueError("descent requires the split form y^2 = x(x-p)(x-q)")
    p, q = curve.split_p, curve.split_q
    if (p - q).is_zero() or p.is_zero() or q.is_zero():
        raise ValueError("split curve is degenerate: 0, p, q must be distinct")
    return p, q


def descent_pair_functions(
    point: CurvePoint, curve: WeierstrassCurve
) -> tuple[RationalFunction, RationalFunction]:
    """Representative functions in Q(t)* for the descent image of a point."""
    p, q = _require_split(curve)
    one = RationalFunction(1)
    if point.kind is PointKind.ZERO:
        return one, one
    if point.kind is PointKind.TWO_TORSION_P:
        return p - q, p * (p - q)
    if point.kind is PointKind.TWO_TORSION_Q:
        return q * (q - p), q - p
    if point.kind is PointKind.TWO_TORSION_ORIGIN:
        # (0, 0) = (p, 0) + (q, 0) in the group law.
        fp, sp = descent_pair_functions(CurvePoint.two_torsion_p(), curve)
        fq, sq = descent_pair_functions(CurvePoint.two_torsion_q(), curve)
        return fp * fq, sp * sq
    x0, y0 = point.x, point.y
    if not (y0 * y0 - x0 * (x0 - p) * (x0 - q)).is_zero():
        raise ValueError(f"{point} does not lie on {curve}")
    if y0.is_zero():
        raise ValueError(
            "2-torsion points must use their dedicated constructors"
        )
    return x0 - q, x0 - p


def descent_image(
    point: CurvePoint, curve: WeierstrassCurve, mode: FieldMode
) -> DescentPair:
    """Square-class pair of a point under the mod-2 descent map."""
    if mode is FieldMode.RATIONALS_ONLY:
        raise ValueError("descent images live over Q(t) or C(t)")
    f, g = descent_pair_functions(point, curve)
    return DescentPair(class_of(f, mode), class_of(g, mode))


class CurveCoordinate(enum.Enum):
    """Coordinate functions on the curve used as first symbol entries."""

    X = "x"
    X_MINUS_P = "x-p"
    X_MINUS_Q = "x-q"


Symbol = tuple[CurveCoordinate, RationalFunction]

_COORD_ORDER = {
    CurveCoordinate.X: 0,
    CurveCoordinate.X_MINUS_P: 1,
    CurveCoordinate.X_MINUS_Q: 2,
}


class BrauerClass:
    """Formal F2 sum of symbols (coordinate, f) on a fixed split curve."""

    __slots__ = ("curve", "symbols")

    def __init__(self, curve: WeierstrassCurve, symbols: Sequence[tuple]) -> None:
        _require_split(curve)
        counts: dict[Symbol, int] = {}
        for coord, f in symbols:
            if not isinstance(coord, CurveCoordinate):
                raise TypeError("first symbol entry must be a CurveCoordinate")
            f = _as_rf(f)
            if f.is_zero():
                raise ValueError("symbol entries must be nonzero")
            counts[(coord, f)] = counts.get((coord, f), 0) + 1
        kept = [sym for sym, n in counts.items() if n % 2]
        kept.sort(key=lambda s: (_COORD_ORDER[s[0]], s[1].sort_key()))
        self.curve = curve
        self.symbols: tuple[Symbol, ...] = tuple(kept)

    def __add__(self, other: "BrauerClass") -> "BrauerClass":
        if not isinstance(other, BrauerClass):
            return NotImplemented
        if self.curve != other.curve:
            raise ValueError("cannot add Brauer classes on different curves")
        return BrauerClass(self.curve, self.symbols + other.symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BrauerClass):
            return NotImplemented
        return self.curve == other.curve and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(("BrauerClass", self.curve, self.symbols))

    def is_zero(self) -> bool:
        return not self.symbols

    def substitute_neg_t(self) -> "BrauerClass":
        """The class pulled back under t -> -t, on the pulled-back curve."""
        from .exactalg import Polynomial

        neg_t = Polynomial((0, -1))
        p = self.curve.split_p.substitute(neg_t)
        q = self.curve.split_q.substitute(neg_t)
        # x(x-p)(x-q) keeps its shape, with the roots p and q swapped.
        swapped = WeierstrassCurve.from_split(q, p)
        swap = {
            CurveCoordinate.X: CurveCoordinate.X,
            CurveCoordinate.X_MINUS_P: CurveCoordinate.X_MINUS_Q,
            CurveCoordinate.X_MINUS_Q: CurveCoordinate.X_MINUS_P,
        }
        return BrauerClass(
            swapped,
            [(swap[c], f.substitute(neg_t)) for c, f in self.symbols],
        )

    def __str__(self) -> str:
        if not self.symbols:
            return "0"
        return " + ".join(f"({c.value}, {f})" for c, f in self.symbols)


def brauer_image(f, g, curve: WeierstrassCurve) -> BrauerClass:
    """The Brauer class (x - p, f) + (x - q, g) of a square-class pair."""
    f, g = _as_rf(f), _as_rf(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("the pair entries must be nonzero")
    symbols = []
    if f != RationalFunction(1):
        symbols.append((CurveCoordinate.X_MINUS_P, f))
    if g != RationalFunction(1):
        symbols.append((CurveCoordinate.X_MINUS_Q, g))
    return BrauerClass(curve, symbols)


class TranscendenceVerdict(enum.Enum):
    TRANSCENDENTAL = "transcendental"
    ALGEBRAIC_OVER_C = "algebraic over C"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TranscendenceResult:
    verdict: TranscendenceVerdict
    target: DescentPair
    generators: tuple[DescentPair, DescentPair]
    combination: tuple[int, ...] | None
    reason: str


def transcendence_test(
    f, g, curve: WeierstrassCurve, mw_rank_bound: int
) -> TranscendenceResult:
    """Decide whether (x-p, f) + (x-q, g) survives base change to C.

    With Mordell-Weil rank 0 over C(t) and full rational 2-torsion, the
    mod-2 quotient of the C(t) points is two dimensional, so when the two
    torsion images are independent they span the kernel of the symbol
    map.  The class then dies over C exactly when the square-class pair
    of (f, g) over C(t) falls in that span.
    """
    mode = FieldMode.CONSTANTS_ARE_SQUARES
    f, g = _as_rf(f), _as_rf(g)
    target = DescentPair(class_of(f, mode), class_of(g, mode))
    gens = (
        descent_image(CurvePoint.two_torsion_p(), curve, mode),
        descent_image(CurvePoint.two_torsion_q(), curve, mode),
    )
    if mw_rank_bound != 0:
        return TranscendenceResult(
            TranscendenceVerdict.UNKNOWN,
            target,
            gens,
            None,
            f"Mordell-Weil rank bound {mw_rank_bound} does not pin the "
            "kernel of the symbol map",
        )
    if not independent([g.as_tuple() for g in gens]):
        return TranscendenceResult(
            TranscendenceVerdict.UNKNOWN,
            target,
            gens,
            None,
            "torsion images are dependent and do not span the kernel",
        )
    member, combo = in_span(target.as_tuple(), [g.as_tuple() for g in gens])
    if member:
        return TranscendenceResult(
            TranscendenceVerdict.ALGEBRAIC_OVER_C,
            target,
            gens,
            tuple(combo),
            "target equals the recorded combination of torsion images",
        )
    return TranscendenceResult(
        TranscendenceVerdict.TRANSCENDENTAL,
        target,
        gens,
        None,
        "target lies outside the span of the torsion images",
    )
