"""Hodge invariants of plane curve complements.

Two independent routes: combinatorial singularity data (``curve``,
``hodge``) and exact graded Milnor algebra dimensions of a defining
polynomial (``poly``, ``graded``).  ``gap`` combines them.
"""

from .curve import (
    CUSP,
    NODE,
    SMOOTH,
    Component,
    CurveSpec,
    Germ,
    Incidence,
    SharedPoint,
    delta_invariant,
    genus,
    ordinary_germ,
    singular_roster,
    validate_spec,
)
from .gap import GapReport, check_rational_identity, gap
from .graded import (
    MilnorProfile,
    build_graded_map,
    dim_S,
    milnor_dim,
    milnor_profile,
    tjurina_from_profile,
)
from .hodge import (
    HDPoly,
    betti1_curve,
    gr2_mult4,
    gr2_transverse,
    gr_dims,
    h2_line_arrangement,
    hd_complement,
    hd_curve,
    hd_irreducible,
)
from .linalg import rank_exact, rank_modular
from .poly import Polynomial, degree_check, parse_poly, partial_derivatives
from .specfile import load_spec

__version__ = "0.1.0"
