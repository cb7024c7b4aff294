"""Exact mu-bases and implicit equations of rational planar curves and
rational ruled surfaces."""

from .curve import (
    CurveParam,
    ImplicitResult,
    MuBasisCurve,
    curve_implicitize,
    mu_basis_curve,
    syzygy_kernel_at_degree,
)
from .errors import (
    DegenerateError,
    InexactDivisionError,
    InputError,
    InvariantError,
    MuBasisError,
    NotRuledError,
    ParseError,
)
from .exprio import format_mpoly, parse_poly
from .forms import HForm, MovingForm, hform_div_exact, hform_gcd
from .linalg import bareiss_det
from .mpoly import MPoly
from .resultant import mpoly_kth_root, power_exponent_probe, sylvester_matrix, sylvester_resultant
from .ruled import (
    NormalizationRecord,
    PlueckerSet,
    RuledParam,
    degree_formula,
    lift_syzygy,
    mu_basis_surface,
    normalize,
    pluecker_all,
    project_syzygy,
    surface_implicitize,
    verify_implicit,
)

__version__ = "0.1.0"
