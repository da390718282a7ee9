"""rmcode: exact invariants, duality certificates, and evaluation codes of
finite projective point sets."""

__version__ = "0.1.0"

from .errors import RMCodeError
from .gf import Field, FqElement, field_create, primitive_element
from .polyring import GREVLEX, Poly, TermOrder, monomial_compare, parse_poly, poly_eval
from .groebner import (
    GroebnerBasis,
    MonomialIdeal,
    buchberger,
    gb_certify,
    minimal_generator_count,
    monomial_colon,
    monomial_dim_degree,
    normal_form,
    standard_monomials,
)
from .variety import (
    HilbertData,
    PointSet,
    hilbert_data,
    points_full_projective,
    points_parameterized,
    points_parse,
    points_torus,
    projective_closure,
    symmetry_equiv_check,
    vanishing_ideal,
)
from .indicators import IndicatorSet, colon_witness, standard_indicators, v_numbers
from .codes import (
    LinearCode,
    WeightMatrix,
    code_of_degree,
    dual_code,
    footprint,
    ghw,
    min_distance,
    monomially_equivalent,
    weight_matrix,
)
from .duality import (
    DualityCertificate,
    affine_duality,
    global_duality,
    gorenstein_crosscheck,
    gorenstein_selfdual_classify,
    local_duality_verify,
    self_dual,
    self_dual_report,
    self_orthogonal,
)
from .artinian import (
    ArtinianClassification,
    artinian_reduce,
    classify,
    find_regular_linear_form,
    socle,
    verify_socle_identities,
)
