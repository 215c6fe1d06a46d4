"""Exact Borel-Weil-Bott computations for basic Lie superalgebras.

Everything is computed over the rationals: contragredient Lie
superalgebras from matrix realizations, PBW normal forms in U(g),
highest-weight Verma modules with the contravariant form, polynomial
sections on the big cell with the dual and translation actions, the
irreducible modules they generate, and projective-embedding tests for
flag supermanifolds.
"""

__version__ = "0.1.0"

from .superalgebra import (
    build_algebra, root_datum, borel, parabolic_from_simples,
    levi_vanishing, Weight, LieSuperalgebra, RootDatum, ParabolicDatum,
    SHCPRepresentation, defining_representation, adjoint_representation,
    trivial_representation, contragredient_dual, double_dual_canonical,
    SuperweylError, UnsupportedFamilyError, DegenerateRootSystemError,
    NonDiagonalCartanError,
)
from .pbw import (
    PBWElement, pbw_product, antipode, transpose_antiauto, hc_eval,
    TruncationError,
)
from .verma import VermaModule, kostant_dimension
from .bigcell import (
    SectionPolynomial, SectionSpace, section_space, multiply,
    torus_weight, check_covariance, CovarianceReport,
)
from .borelweil import (
    extract_irreducible, check_dominance, IrreducibleModule,
    DominanceReport, NonIntegralWeightError, InfiniteDimensionalError,
    partial_span_from_one, coradical_spans,
)
from .embedding import (
    build_graded_algebra, is_very_ample, check_classical_section,
    big_cell_cover_data, semi_invariant_locus, EmbeddingAlgebra,
    NonDominantCharacterError, grassmannian_1_1_setup,
)
