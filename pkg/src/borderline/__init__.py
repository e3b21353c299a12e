"""Exact multigraded apolarity toolkit over products of projective spaces."""
from .ring import (
    QQ,
    GradedRing,
    Ideal,
    Polynomial,
    graded_piece_dimension,
    homogeneous_components,
    monomial_basis,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    colon,
    colon_ideal,
    initial_ideal,
    intersect,
    normal_form,
    parse_order,
    saturate,
    saturate_irrelevant,
)
from .apolarity import (
    DualForm,
    annihilator,
    catalecticant,
    contract,
    hessian,
    is_concise,
    is_nondegenerate_even,
    tensor_form,
)
from .hilbert import (
    generic_hilbert_function,
    has_generic_hf,
    hilbert_function,
    macaulay_upper,
    stable_value,
)
from .homological import ext1_ci_formula, ext1_degree0_dim, hom_degree0_dim, syzygies
from .parse import parse_ideal, parse_polynomial
from .border import (
    EnumerationConfig,
    Report,
    enumerate_monomial_apolar_ideals,
    monomial_border_rank,
    plateau_identifiability,
    slip_ext_filter,
    tensor_wildness,
)
from .vsp import (
    ci_vspbar,
    cw_cubic_vspbar,
    generic_omega_rank,
    monomial_vps_report,
    sylvester_binary,
    ternary_cubic_vspbar,
)

__version__ = "0.1.0"
