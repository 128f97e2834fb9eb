"""torictop: exact invariants of moment-angle complexes and quasitoric manifolds.

Everything is computed with exact arithmetic (arbitrary-precision integers,
finite fields, rationals); there is no floating point in this package.
"""

__version__ = "0.1.0"

from .complexes import (
    FVector,
    HVector,
    PolytopeDual,
    SimplicialComplex,
    dehn_sommerville_report,
    f_vector,
    full_subcomplex,
    h_vector,
    h_vector_of,
    join,
    polygon_boundary,
    polygon_polytope,
    simplex_boundary,
    simplex_polytope,
    validate_complex,
)
from .errors import CapExceededError, ConsistencyError, InputError
from .homology import (
    GradedHomology,
    IntegerMatrix,
    SNFResult,
    chain_homology,
    homology,
    reduced_homology,
    smith_normal_form,
)
from .momentangle import (
    WedgeSplitting,
    WedgeSummand,
    moment_angle_homology,
    wedge_splitting,
)
from .projection import (
    CubeCensus,
    NontrivialityVerdict,
    ProjectionReport,
    SummandCertificate,
    TrivialityCertificate,
    cube_census,
    p_local_note,
    projection_decomposition,
    squaring_kernel,
    steenrod_hit_search,
    suspension_triviality_check,
    two_simplices_check,
)
from .quasitoric import (
    CharacteristicMatrix,
    CohomologyPresentation,
    QuadraticPresentationF2,
    cohomology_ring,
    cube_parameters,
    cube_presentation,
    generalized_bott,
    power_map_scalars,
    product_presentation,
    validate_characteristic,
)
from .splitting import (
    EvenBettiData,
    SplitSummand,
    eigen_scalar,
    is_primitive_root,
    primitive_root,
    split,
    sphere_wedge_decomposition,
    vanishing_range_check,
)
