"""Exact invariants of the cyclic weighted hypersurfaces
x1^a1 x2 + ... + xn^an x1 = 0, orbifold BMY-type inequality checks, and
Seifert / lens-space arithmetic."""
from .errors import (
    ConsistencyFailure,
    DegenerateSystem,
    InputError,
    SpecialAdjunctionCase,
    WpsLabError,
)
from .exact import ext_gcd, factorize, smith_normal_form
from .hypersurface import (
    canonical_data,
    contracted_surface,
    homology_profile,
    hypersurface_invariants,
    k_self_intersection,
    middle_rank_closed_form,
    milnor_orlik_rank,
)
from .weights import ExponentTuple, WeightSystem, density_survey, solve_weights

__version__ = "0.1.0"
