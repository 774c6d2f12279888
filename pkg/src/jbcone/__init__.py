"""Jordan-algebra cone arithmetic, geometry, and verification suites."""

from .algebra import (
    AlgebraMismatch,
    BasePointNotInCone,
    DirectSum,
    Element,
    LinearOperator,
    NotInCone,
    Orthant,
    SingularElement,
    SpectralDecomposition,
    SpinFactor,
    SymMatrices,
    alg_from_json,
    alg_to_json,
    apply_operator,
    commutator,
    eigenvalues,
    element,
    element_from_json,
    element_to_json,
    exp_element,
    identity,
    inner,
    inv_sqrt,
    inverse,
    is_jh_mode,
    left_mult,
    log_element,
    pack_sym,
    power,
    product,
    quadratic_rep,
    random_element,
    random_interior,
    spectral_decompose,
    spectral_radius,
    sqrt,
    triple_product,
    unpack_sym,
)
from .cone import (
    BOUNDARY_RTOL,
    ConeClassification,
    ConeStatus,
    Functional,
    classify,
    frame_states,
    functional_from_json,
    functional_to_json,
    interior_by_states,
    jh_identity_check,
    min_frame_state,
    normality_probe,
    order_leq,
    order_unit_norm,
    random_state,
    relative_eigenvalues,
    self_dual_check,
    squares_norm_axioms,
    state_value,
)
from .geometry import (
    Automorphism,
    LoosResiduals,
    TangentVector,
    apply_automorphism,
    automorphism_from_point,
    caratheodory_restricted,
    characteristic_metric,
    compose,
    gauge_M,
    geodesic_through,
    loos_axioms,
    quadratic_automorphism,
    riemannian_metric_jh,
    symmetry,
    tangent_norm_b,
    tangent_norm_tau,
    tau_isometry_check,
    thompson_distance,
)
from .harness import DEFAULT_INSTANCES, replay_witness, run_all, run_suite
from .report import SUITE_IDS, SuiteReport, SuiteSpec

__version__ = "0.1.0"
