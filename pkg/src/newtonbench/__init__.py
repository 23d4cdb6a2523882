"""newtonbench: exact Newton-polygon and lower-bound machinery at desk scale.

Valuations, polygons and certificates are exact rational arithmetic end to
end; the tree enumerator exhaustively refutes the existence of shallow
deciders for explicit hard polynomial families.
"""

__version__ = "0.1.0"

from .valuation import (
    ExtVal,
    INFINITY,
    Prime,
    TWO,
    ValuationError,
    format_rational,
    parse_rational,
    ultrametric_sum_bound,
    val_p,
)
from .polynomials import (
    DensePoly,
    PolynomialError,
    RootSpec,
    ValuedPoly,
    coefficient_valuations,
    divides,
    from_roots,
    poly_from_json,
    poly_to_json,
    squarefree_part,
)
from .polygon import (
    NewtonPolygon,
    PolygonError,
    RootProfile,
    lower_hull,
    polygon_report,
    root_valuation_profile,
    slope_witness,
)
from .families import (
    DEFAULT_BIT_BUDGET,
    FamilyId,
    RepresentationInfeasible,
    gen_exact,
    gen_valued,
    parse_family,
    x_points,
)
from .certificates import (
    CertificateError,
    GapSequence,
    LemmaBound,
    LemmaCertificate,
    check_lemma_conditions,
    gap_condition,
    lemma_bound,
    make_certificate,
    mu_lower_count,
    nonuniform_threshold,
    nonuniform_threshold_exceeded,
    subset_sums_distinct,
    uniform_threshold,
    uniform_threshold_exceeded,
)
from .trees import (
    AcceptSet,
    Branch,
    Compute,
    Const,
    Input,
    Leaf,
    PathPolynomial,
    TreeError,
    accept_set,
    accepts,
    decides,
    depth,
    format_tree,
    multiplicative_depth,
    parse_tree,
    trace_generic_path,
    validate,
)
from .enumeration import (
    PathClass,
    RefutationReport,
    count_canonical_trees,
    enumerate_and_refute,
    find_decider,
    generic_path_classes,
)

__all__ = [name for name in dir() if not name.startswith("_")]
