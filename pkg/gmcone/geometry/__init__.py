from gmcone.geometry.cone import (  # noqa: F401
    ZERO,
    Boundary,
    BoundaryPt,
    ConePoint,
    FunctionVector,
    Interior,
    InteriorPt,
    Membership,
    ModelPoint,
    Verdict,
    Zero,
    cone_to_function,
    d_infinity,
    e_extension,
    e_function,
    ext_on_cone,
    ext_sup_oracle,
    gm_gromov_product,
    in_neighborhood,
    lift_phi,
    lift_psi,
    model_extremal_length,
    model_to_function,
    null_test,
    pairing_i,
    pairing_i_based,
    psi_inverse,
)
from gmcone.geometry.foliation import (  # noqa: F401
    CurveClass,
    MeasuredFoliation,
    curve_family,
    intersection_number,
    normalize_projective,
    projectively_equal,
)
from gmcone.geometry.teich import (  # noqa: F401
    DEFAULT_BASEPOINT,
    INFINITY,
    ExtremalForm,
    KerckhoffSolution,
    TeichPoint,
    boundary_point,
    boundary_slope,
    extremal_length,
    geodesic_endpoints,
    geodesic_ray,
    gromov_product,
    hyperbolic_half_distance,
    kerckhoff_sup,
    orthogonal_pair,
    teich_distance,
)
