"""Exact Groebner-basis toolkit for ideals of elementary symmetric
polynomials: sparse rational polynomial arithmetic, Buchberger's algorithm,
symmetric-function identities, sign-reversing involution certification and
Hilbert series of the resulting quotients."""

from .poly import (
    ArityMismatchError,
    LexOrder,
    PolyParseError,
    Polynomial,
    ZeroPolynomialError,
    format_polynomial,
    mono_compare,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_polynomial,
)
from .groebner import (
    DivisionResult,
    GroebnerBasis,
    ZeroIdealError,
    buchberger,
    divide,
    is_groebner_basis,
    is_reduced,
    normal_form,
    reduce_basis,
    reduced_groebner_basis,
    s_polynomial,
)
from .symfunc import (
    check_e1ek_reduction,
    check_ekn_identity,
    check_hkn_identity,
    check_newton,
    check_telescope,
    conjectured_gb_e1ek,
    conjectured_gb_ek,
    elementary,
    homogeneous,
    powersum,
    weight,
)
from .involution import (
    CertReport,
    SignedPair,
    apply_f,
    certify_involution,
    enumerate_carrier,
    in_carrier,
)
from .hilbert import (
    NonArtinianError,
    SeriesPoly,
    closed_form_series,
    quotient_dimension,
    staircase_series,
)

__version__ = "0.1.0"
