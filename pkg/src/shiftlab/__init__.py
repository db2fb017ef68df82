"""Rate classification and desk-scale simulation for weighted shifts
and dissipative composition operators."""

from .canon import canonical_json, fingerprint
from .classify import (
    ClassificationReport,
    DistortionError,
    ExpansivityMode,
    Status,
    Verdict,
    classify_atomic_expansive,
    classify_atomic_uniform,
    classify_expansive,
    classify_not_structurally_stable,
    classify_positively_expansive,
    classify_report,
    classify_shadowing_gh,
    classify_shift,
    classify_sss,
    classify_structurally_stable,
    classify_uniformly_expansive,
    classify_uniformly_positively_expansive,
    implication_audit,
)
from .seqcore import (
    Direction,
    EventuallyPeriodicSequence,
    Quantifier,
    SequenceError,
    SideRate,
    rate_exact,
    rate_horizon,
    side_geometric_means,
    window_product,
)
from .simulate import (
    AtomicOperator,
    BruteForceReport,
    BruteMode,
    CompositionOperator,
    NoSplitting,
    Pseudotrajectory,
    ShadowResult,
    ShiftOperator,
    Splitting,
    brute_force_expansivity,
    build_splitting,
    make_pseudotrajectory,
    operator_for,
    orbit_norms,
    shadow,
)
from .systems import (
    AtomicSystem,
    CellStructure,
    Cycle,
    DissipativeSystem,
    DistortionCertificate,
    InvalidSystem,
    Line,
    MeasureSequence,
    StarCertificate,
    WeightSequence,
    check_bounded_distortion,
    check_star,
    derived_distortion_bound,
    induced_weights,
)

__version__ = "0.1.0"
