"""Exact reconstruction of Brauer class computations on elliptic surfaces over Q(t)."""

from .exactalg import (
    Factorization,
    Polynomial,
    RationalFunction,
    int_factor,
    poly_factor,
    poly_gcd,
    rat_is_square,
)
from .funcfield import (
    INFINITY,
    Place,
    UnitPart,
    UnsupportedResidueFieldError,
    places_of_support,
    unit_part,
    valuation,
)
from .squareclass import FieldMode, SquareClassVector, class_of, in_span, independent
from .hilbert import (
    REAL,
    RationalPlace,
    SymbolValue,
    hilbert_symbol,
    legendre,
    product_formula_check,
    qp_is_square,
)
from .residues import (
    QtBrauerClass,
    ResidueVerdict,
    UnramifiednessReport,
    Verdict,
    check_unramified_P1,
    residue_of_class,
    tame_symbol,
)
from .elliptic import (
    ClassificationError,
    FiberReport,
    KodairaType,
    SingularCurveError,
    SurfaceReport,
    WeierstrassCurve,
    classify_surface,
    invariants,
    kodaira_type_at,
    minimalize_at,
)
from .descent import (
    BrauerClass,
    CurveCoordinate,
    CurvePoint,
    DescentPair,
    TranscendenceResult,
    TranscendenceVerdict,
    brauer_image,
    descent_image,
    descent_pair_functions,
    transcendence_test,
)
from .brauer import (
    AdelicPointSpec,
    DegeneratePointError,
    ObstructionReport,
    SamplingReport,
    SurfacePoint,
    adelic_pairing,
    evaluate_local,
    is_local_point,
    local_points,
    reference_adelic_point,
    reference_class,
    reference_curve,
    sample_vanishing,
)

__version__ = "0.1.0"

__all__ = [
    "AdelicPointSpec",
    "BrauerClass",
    "ClassificationError",
    "CurveCoordinate",
    "CurvePoint",
    "DegeneratePointError",
    "DescentPair",
    "Factorization",
    "FiberReport",
    "FieldMode",
    "INFINITY",
    "KodairaType",
    "ObstructionReport",
    "Place",
    "Polynomial",
    "QtBrauerClass",
    "REAL",
    "RationalFunction",
    "RationalPlace",
    "ResidueVerdict",
    "SamplingReport",
    "SingularCurveError",
    "SquareClassVector",
    "SurfacePoint",
    "SurfaceReport",
    "SymbolValue",
    "TranscendenceResult",
    "TranscendenceVerdict",
    "UnitPart",
    "UnramifiednessReport",
    "UnsupportedResidueFieldError",
    "Verdict",
    "WeierstrassCurve",
    "adelic_pairing",
    "brauer_image",
    "check_unramified_P1",
    "class_of",
    "classify_surface",
    "descent_image",
    "descent_pair_functions",
    "evaluate_local",
    "hilbert_symbol",
    "in_span",
    "independent",
    "int_factor",
    "invariants",
    "is_local_point",
    "kodaira_type_at",
    "legendre",
    "local_points",
    "minimalize_at",
    "places_of_support",
    "poly_factor",
    "poly_gcd",
    "product_formula_check",
    "qp_is_square",
    "rat_is_square",
    "reference_adelic_point",
    "reference_class",
    "reference_curve",
    "residue_of_class",
    "sample_vanishing",
    "tame_symbol",
    "transcendence_test",
    "unit_part",
    "valuation",
]
