"""Jeu de taquin on random square tableaux: exact combinatorics, sampling,
trajectory experiments, and an empirical latitude/longitude atlas."""

from .rng import RngSpec, Stream
from .tableaux import (
    Position,
    StandardTableau,
    YoungDiagram,
    enumerate_syt,
    hook_dimension,
    renumber,
    rotate_complement,
    transpose,
    validate,
)
from .dynamics import (
    EvacuationPath,
    JdtRecord,
    LazyPath,
    SurferCoupling,
    build_coupling,
    evacuation_path,
    happy_box_all,
    happy_box_check,
    is_pieri,
    jdt_slide,
    lazy_jdt_path,
    modified_jdt,
    multisurfer_longitude,
    psi_tilde_sequence,
    scaled_evacuation_curve,
)
from .sampling import (
    sample_permutation,
    sample_uniform_pieri,
    sample_uniform_syt,
)
from .rsk import (
    check_shift_identity,
    greene_shape,
    path_equivalence_check,
    rsk,
    schuetzenberger_star,
)
from .geography import (
    AtlasFormatError,
    BoundaryError,
    GeographyAtlas,
    UnsupportedVersionError,
    build_atlas,
    latitude,
    load_atlas,
    longitude,
    meridian_point,
    save_atlas,
)
from .spectral import (
    MomentPolynomial,
    SeminormalModule,
    build_module,
    jm_matrix,
    lemma_expvalue_check,
    symmetrizer,
    transposition_matrix,
    verify_coxeter_relations,
)
from .experiments import (
    ExperimentConfig,
    ExperimentSummary,
    TrialPoint,
    TrialReport,
    emit_reports,
    run_evacuation_experiment,
    run_lazy_path_experiment,
)
from .stats import chi_square_statistic, ks_uniformity

__version__ = "0.1.0"
