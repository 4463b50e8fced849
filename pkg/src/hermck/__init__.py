"""Exact Cauchy–Kovalevskaya extensions in Hermitean Clifford analysis."""
from .algebra import (
    GaussianRational,
    IMAG_UNIT,
    SpinorElement,
    Witt,
    blade,
    degree_part,
    f,
    fd,
    split_last,
    witt_left_mul,
)
from .ck import (
    CkData,
    IncompatibleDataError,
    check_compatibility,
    extend_closed_m0,
    extend_closed_m1,
    extend_full,
    extend_scheme,
    extend_special,
    extend_truncated_series,
    extract_data,
    is_monogenic,
)
from .dims import SpaceDescriptor, dim_formula, dim_m_alt, dim_recurrences_check, fischer_project
from .linalg import ExactMatrix, monogenic_basis, nullspace
from .poly import (
    Monomial,
    SpinorPoly,
    bidegree_component,
    dirac,
    laplacian_tilde,
    mul_var,
    restrict,
    term,
)

__version__ = "0.1.0"
