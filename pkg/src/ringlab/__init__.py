"""Finite rings, corner subrings, and exhaustive unit-regularity checks."""

from .rings import (
    DEFAULT_AXIOM_CAP,
    DEFAULT_SIZE_CAP,
    FiniteRing,
    MatrixRing,
    ProductRing,
    SizeCapError,
    TableRing,
    TriangularRing,
    ZmodRing,
    check_ring_axioms,
)
from .corners import (
    CornerRing,
    Idempotent,
    PeirceParts,
    as_idempotent,
    complement,
    corner_product_embedding,
    corner_ring,
    idempotents,
    peirce_decompose,
)
from .regularity import (
    RegularityKind,
    RegularityWitness,
    ZeroDivisorStatus,
    classify,
    is_unit_regular_ring,
    one_sided_unit_regular_witness,
    regular_set,
    regular_witness,
    unit_regular_set,
    unit_regular_witness,
    zero_divisor_status,
)
from .theorem import (
    CHAIN_IMPLICATIONS,
    CONDITION_LABELS,
    CornerWitness,
    EQUIVALENCE_LABELS,
    InconsistencyError,
    PreconditionError,
    VerdictReport,
    build_m2_scaffold,
    check_condition,
    extract_corner_witness,
    extract_one_sided_corner_witness,
    implication_violations,
    theorem_verdict,
    verify_equivalences,
    verify_ur_inheritance,
)
from .report import (
    CURATED_FAMILY,
    SCHEMA_VERSION,
    classify_payload,
    emit_report,
    family_payload,
    make_document,
    payload_bytes,
    shift_payload,
    verify_payload,
    witness_payload,
)
from .shift import BandOperator, BandRing, run_shift_demo, truncation_dims
from .specparse import (
    MatrixSpec,
    ProductSpec,
    RingSpec,
    RingSpecError,
    TriangularSpec,
    ZmodSpec,
    build_ring,
    parse_ring_spec,
    spec_cardinality,
    spec_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "BandOperator",
    "BandRing",
    "CHAIN_IMPLICATIONS",
    "CONDITION_LABELS",
    "CURATED_FAMILY",
    "CornerRing",
    "CornerWitness",
    "DEFAULT_AXIOM_CAP",
    "DEFAULT_SIZE_CAP",
    "EQUIVALENCE_LABELS",
    "FiniteRing",
    "Idempotent",
    "InconsistencyError",
    "MatrixRing",
    "MatrixSpec",
    "PeirceParts",
    "PreconditionError",
    "ProductRing",
    "ProductSpec",
    "RegularityKind",
    "RegularityWitness",
    "RingSpec",
    "RingSpecError",
    "SCHEMA_VERSION",
    "SizeCapError",
    "TableRing",
    "TriangularRing",
    "TriangularSpec",
    "VerdictReport",
    "ZeroDivisorStatus",
    "ZmodRing",
    "ZmodSpec",
    "as_idempotent",
    "build_m2_scaffold",
    "build_ring",
    "check_condition",
    "check_ring_axioms",
    "classify",
    "classify_payload",
    "complement",
    "corner_product_embedding",
    "corner_ring",
    "emit_report",
    "extract_corner_witness",
    "extract_one_sided_corner_witness",
    "family_payload",
    "idempotents",
    "implication_violations",
    "is_unit_regular_ring",
    "make_document",
    "one_sided_unit_regular_witness",
    "parse_ring_spec",
    "payload_bytes",
    "peirce_decompose",
    "regular_set",
    "regular_witness",
    "run_shift_demo",
    "shift_payload",
    "spec_cardinality",
    "spec_to_text",
    "theorem_verdict",
    "truncation_dims",
    "unit_regular_set",
    "unit_regular_witness",
    "verify_equivalences",
    "verify_payload",
    "verify_ur_inheritance",
    "witness_payload",
    "zero_divisor_status",
]
