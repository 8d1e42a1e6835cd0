from .cert_pomes import (
    Verdict, CertKind, Certificate, DecisionOutcome, cert_check
)
from .config_pomes import (
    QformsParam, qforms_setup, qforms_get
)
from .decision_pomes import (
    WittDecomposition, ArfResult,
    ts_isometry, bil_witt_decompose, bil_is_metabolic, bil_isometry,
    wp_solve, wp_linear_system, quad_normalize, arf_invariant,
    quad_isotropic, quad_isometry, form_isometry, witt_equivalent, block_norm_symbols
)
from .env_pomes import (
    APP_PREFIX,
    env_get_str, env_get_int, env_get_enum
)
from .error_pomes import (
    QformsError, IrreducibilityUnknown, UnsupportedInseparableStep, DegreeCapExceeded,
    DivisionByZero, TowerMismatch, NotSimpleStep, ZeroSubspace, SingularInput,
    DimensionMismatch, OddDimension, ZeroScalar, InseparableContext, GenerationExhausted,
    BoundExceeded, UnknownSuite, UnsupportedCharacteristic, NotSymmetric, NameInUse,
    NotTotallySingular, ScriptError, ScriptSyntaxError, UnknownIdentifier, TypeMismatch
)
from .expr_pomes import (
    SCRIPT_SCHEMA, Script, script_parse, script_format
)
from .field_pomes import (
    StepKind, FieldTower, TowerStep, FieldElement, CharPolyData,
    tower_base, tower_extend, element_arith, char_poly, norm, norm_stepwise,
    functional_s, pth_root, sqrt, poly_eval, mp_element
)
from .form_pomes import (
    FormKind, BilinearForm, QuadraticForm, PForm,
    bil_gram, bil_diagonal, bil_pfister, bil_metabolic, bil_hyperbolic,
    quad_matrix, quad_block, quad_blocks, quad_diagonal, quad_quasi_pfister,
    quad_hyperbolic, quad_pfister, pform_diagonal, pform_quasi_pfister,
    diagonal_quadratic, form_kind
)
from .frobenius_pomes import (
    SquareSubspace,
    subspace_from_generators, subspace_member, subspace_sum, subspace_intersect,
    subspace_contains, subspace_equals, subspace_transporter, stabilizer_field, field_closure
)
from .gf_pomes import (
    GaloisField, gf_field, gf_embedding
)
from .lab_pomes import (
    Status, SuiteName, SUITE_MODES, InstanceSpec, Instance, InstanceResult, SuiteReport,
    gen_instance, shrink_instance, suite_specs, run_suite,
    check_artin_springer_separable, check_isometry_descent, check_similarity_descent,
    check_symmetric_function_lemma, check_norm_principle, check_transfer_identities, check_oracles
)
from .obj_pomes import (
    obj_to_dict, exc_format
)
from .oracle_pomes import (
    OracleKind, BruteForceOracle,
    oracle_bruteforce, oracle_gl_matrices, oracle_congruence_classes
)
from .place_pomes import (
    INFINITY, Place,
    has_places, place_factors, place_label, place_from_label, local_symbol, norm_symbols, wp_pole
)
from .report_pomes import (
    TZ_LOCAL, REPORT_SCHEMA,
    report_summary, report_lines, report_write
)
from .script_pomes import (
    ScriptState, script_resolve, script_run, script_execute
)
from .similarity_pomes import (
    Completeness, SimilarityField, QuasiPfisterFactorization, RelativeFactors,
    ts_similarity_field, ts_relative_factors, bil_similarity_factor,
    bil_similarity_field, similar, round_values_check
)
from .transfer_pomes import (
    TransferContext, CheckEntry, TransferReport,
    transfer_context, transfer_bilinear, transfer_quadratic,
    transfer_witt_checks, frobenius_reciprocity_check
)
from .validation_pomes import (
    VALIDATION_MSG_LANGUAGE, VALIDATION_MSG_PREFIX, MsgLang,
    validate_int, validate_str, validate_range, validate_keys, validate_format_error
)

__all__ = [
    # cert_pomes
    "Verdict", "CertKind", "Certificate", "DecisionOutcome", "cert_check",
    # config_pomes
    "QformsParam", "qforms_setup", "qforms_get",
    # decision_pomes
    "WittDecomposition", "ArfResult",
    "ts_isometry", "bil_witt_decompose", "bil_is_metabolic", "bil_isometry",
    "wp_solve", "wp_linear_system", "quad_normalize", "arf_invariant",
    "quad_isotropic", "quad_isometry", "form_isometry", "witt_equivalent", "block_norm_symbols",
    # env_pomes
    "APP_PREFIX",
    "env_get_str", "env_get_int", "env_get_enum",
    # error_pomes
    "QformsError", "IrreducibilityUnknown", "UnsupportedInseparableStep", "DegreeCapExceeded",
    "DivisionByZero", "TowerMismatch", "NotSimpleStep", "ZeroSubspace", "SingularInput",
    "DimensionMismatch", "OddDimension", "ZeroScalar", "InseparableContext", "GenerationExhausted",
    "BoundExceeded", "UnknownSuite", "UnsupportedCharacteristic", "NotSymmetric", "NameInUse",
    "NotTotallySingular", "ScriptError", "ScriptSyntaxError", "UnknownIdentifier", "TypeMismatch",
    # expr_pomes
    "SCRIPT_SCHEMA", "Script", "script_parse", "script_format",
    # field_pomes
    "StepKind", "FieldTower", "TowerStep", "FieldElement", "CharPolyData",
    "tower_base", "tower_extend", "element_arith", "char_poly", "norm", "norm_stepwise",
    "functional_s", "pth_root", "sqrt", "poly_eval", "mp_element",
    # form_pomes
    "FormKind", "BilinearForm", "QuadraticForm", "PForm",
    "bil_gram", "bil_diagonal", "bil_pfister", "bil_metabolic", "bil_hyperbolic",
    "quad_matrix", "quad_block", "quad_blocks", "quad_diagonal", "quad_quasi_pfister",
    "quad_hyperbolic", "quad_pfister", "pform_diagonal", "pform_quasi_pfister",
    "diagonal_quadratic", "form_kind",
    # frobenius_pomes
    "SquareSubspace",
    "subspace_from_generators", "subspace_member", "subspace_sum", "subspace_intersect",
    "subspace_contains", "subspace_equals", "subspace_transporter", "stabilizer_field", "field_closure",
    # gf_pomes
    "GaloisField", "gf_field", "gf_embedding",
    # lab_pomes
    "Status", "SuiteName", "SUITE_MODES", "InstanceSpec", "Instance", "InstanceResult", "SuiteReport",
    "gen_instance", "shrink_instance", "suite_specs", "run_suite",
    "check_artin_springer_separable", "check_isometry_descent", "check_similarity_descent",
    "check_symmetric_function_lemma", "check_norm_principle", "check_transfer_identities", "check_oracles",
    # obj_pomes
    "obj_to_dict", "exc_format",
    # oracle_pomes
    "OracleKind", "BruteForceOracle",
    "oracle_bruteforce", "oracle_gl_matrices", "oracle_congruence_classes",
    # place_pomes
    "INFINITY", "Place",
    "has_places", "place_factors", "place_label", "place_from_label", "local_symbol", "norm_symbols", "wp_pole",
    # report_pomes
    "TZ_LOCAL", "REPORT_SCHEMA",
    "report_summary", "report_lines", "report_write",
    # script_pomes
    "ScriptState", "script_resolve", "script_run", "script_execute",
    # similarity_pomes
    "Completeness", "SimilarityField", "QuasiPfisterFactorization", "RelativeFactors",
    "ts_similarity_field", "ts_relative_factors", "bil_similarity_factor",
    "bil_similarity_field", "similar", "round_values_check",
    # transfer_pomes
    "TransferContext", "CheckEntry", "TransferReport",
    "transfer_context", "transfer_bilinear", "transfer_quadratic",
    "transfer_witt_checks", "frobenius_reciprocity_check",
    # validation_pomes
    "VALIDATION_MSG_LANGUAGE", "VALIDATION_MSG_PREFIX", "MsgLang",
    "validate_int", "validate_str", "validate_range", "validate_keys", "validate_format_error"
]

from importlib.metadata import PackageNotFoundError, version
try:
    __version__: str = version("pypomes_qforms")
except PackageNotFoundError:
    # running from a source tree
    __version__ = "0.0.0"
__version_info__: tuple = tuple(int(i) for i in __version__.split(".") if i.isdigit())
