"""lcdmds: LCD / MDS / non-Reed-Solomon codes over odd-characteristic fields.

Construction of generalized, twisted, and Roth-Lempel Reed-Solomon-style
generator matrices; exact finite-field linear algebra; LCD, MDS and
non-RS-type verification; and sweep harnesses reproducing the published
example searches.
"""

from ._version import __version__
from .classify import (
    NonGrsEvidence,
    VERDICT_GRS_COMPATIBLE,
    VERDICT_INAPPLICABLE,
    VERDICT_NON_GRS,
    is_ntdelta_set,
    non_grs_check,
    rl_mds_check,
    theorem_preconditions,
)
from .codes import (
    CodeVerdict,
    LinearCode,
    dual_generator,
    hull_dimension,
    is_lcd,
    is_mds,
    min_distance_bruteforce,
)
from .construct import (
    ALPHA_KINDS,
    INFINITY,
    ROOTS_OF_UNITY,
    ROOTS_UNION_GAMMA_R_SCALED,
    ROOTS_UNION_GAMMA_SCALED,
    ROOTS_WITH_ZERO,
    RothLempelParams,
    StructuredAlpha,
    TwistedRSParams,
    grs_generator,
    roth_lempel_code,
    roth_lempel_generator,
    structured_alpha,
    twisted_rs_code,
    twisted_rs_generator,
)
from .gf import (
    FieldElement,
    FiniteField,
    SubfieldView,
    conjugate,
    field_arith,
    make_field,
    p_adic_valuation,
    power_sum,
    primitive_element,
    primitive_moduli,
    subfield,
    subfield_embedding,
    subfield_primitive_element,
)
from .linalg import (
    FieldMatrix,
    determinant,
    entrywise_inverse,
    field_for_order,
    format_matrix,
    gram,
    mat_mul,
    minor,
    parse_matrix,
    rank,
    right_kernel,
    systematic_form,
)
from .sweep import (
    EXAMPLE_IDS,
    FAMILIES,
    ReproduceResult,
    SweepReport,
    SweepRow,
    SweepSpec,
    evaluate_code,
    load_report,
    persist_report,
    reproduce,
    run_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
