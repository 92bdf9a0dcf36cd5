"""Exact spanning-tree counts of bicirculant graphs.

The package counts spanning trees of the two-layer circulant graphs
BC(Z_n; R, T, S) three independent ways (Kirchhoff matrix-tree, exact
resultants, high-precision Chebyshev evaluation) and exposes the
arithmetic square structure, Mahler-measure asymptotics and rational
generating functions of the resulting integer sequences.
"""

from .arithmetic import (
    ArithmeticProfile,
    SquareWitness,
    arithmetic_profile,
    verify_square_structure,
)
from .counting import (
    SpectralSystem,
    TreeCount,
    closed_count_formal,
    degeneracy_report,
    spectral_system,
    tree_count_chebyshev,
    tree_count_closed,
)
from .errors import (
    BforestError,
    DegenerateSystem,
    EmptySpokes,
    HalfWithoutEvenN,
    InexactDivision,
    NonConvergence,
    NonDivisible,
    NonIntegralResult,
    NonPositiveStructure,
    NotAPerfectSquare,
    NotConnected,
    OrderExceeded,
    OutOfRange,
    SpecError,
    UnitCircleAmbiguity,
)
from .genfun import (
    RationalGF,
    TauSequence,
    expand_series,
    find_recurrence,
    genfun,
    gf_eval,
    symmetry_scale,
    tau_sequence,
    verify_symmetry,
)
from .graphs import (
    ConnectionSpec,
    GraphRealization,
    check_connectivity,
    classify_family,
    is_connected,
    realize,
    validate_spec,
)
from .mahler import (
    MahlerEstimate,
    asymptotic_prediction,
    convergence_report,
    growth_base,
    mahler_quadrature,
    mahler_root_product,
)
from .matrixtree import det_fraction_free, laplacian, tree_count_oracle
from .polynomials import (
    IntPoly,
    SymmetricLaurentPoly,
    chebyshev_T,
    chebyshev_transform,
    exact_divide,
    resultant,
    roots_numeric,
    squarefree_part,
)

__version__ = "1.0.0"

__all__ = [
    "ArithmeticProfile",
    "SquareWitness",
    "arithmetic_profile",
    "verify_square_structure",
    "SpectralSystem",
    "TreeCount",
    "closed_count_formal",
    "degeneracy_report",
    "spectral_system",
    "tree_count_chebyshev",
    "tree_count_closed",
    "BforestError",
    "DegenerateSystem",
    "EmptySpokes",
    "HalfWithoutEvenN",
    "InexactDivision",
    "NonConvergence",
    "NonDivisible",
    "NonIntegralResult",
    "NonPositiveStructure",
    "NotAPerfectSquare",
    "NotConnected",
    "OrderExceeded",
    "OutOfRange",
    "SpecError",
    "UnitCircleAmbiguity",
    "RationalGF",
    "TauSequence",
    "expand_series",
    "find_recurrence",
    "genfun",
    "gf_eval",
    "symmetry_scale",
    "tau_sequence",
    "verify_symmetry",
    "ConnectionSpec",
    "GraphRealization",
    "check_connectivity",
    "classify_family",
    "is_connected",
    "realize",
    "validate_spec",
    "MahlerEstimate",
    "asymptotic_prediction",
    "convergence_report",
    "growth_base",
    "mahler_quadrature",
    "mahler_root_product",
    "det_fraction_free",
    "laplacian",
    "tree_count_oracle",
    "IntPoly",
    "SymmetricLaurentPoly",
    "chebyshev_T",
    "chebyshev_transform",
    "exact_divide",
    "resultant",
    "roots_numeric",
    "squarefree_part",
]
