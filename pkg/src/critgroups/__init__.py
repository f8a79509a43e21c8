"""Critical groups of arithmetical structures on multigraphs.

Exact integer linear algebra (determinantal divisors, Smith normal
forms), the star-clique reduction of a structure at a vertex, exhaustive
enumeration of structures with bounded r, and a verifier/fuzzer for the
divisibility relations connecting all of these.
"""

from .enumeration import EnumerationQuery, enumerate_structures, sample_structure
from .graphs import (
    ArithmeticalStructure,
    CriticalGroup,
    GraphError,
    Multigraph,
    ReductionResult,
    StructureError,
    StructureViolation,
    critical_group,
    laplacian_structure,
    operation_matrix_consistency,
    star_clique_reduction,
    structure_matrix,
    validate_structure,
)
from .linalg import (
    IntegerMatrix,
    MinorGcdProfile,
    MinorSpec,
    SnfResult,
    chio_condense,
    desnanot_jacobi_residual,
    determinant,
    minor,
    minor_gcd_all,
    minor_gcd_corner,
    minor_gcd_profile,
    row_gcd,
    smith_normal_form,
)
from .verify import (
    FuzzConfig,
    FuzzSummary,
    PropertyId,
    PropertyReport,
    check_conjecture_alpha,
    check_conjecture_minors,
    fuzz_campaign,
    verify_minor_properties,
    verify_operation_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticalStructure",
    "CriticalGroup",
    "EnumerationQuery",
    "FuzzConfig",
    "FuzzSummary",
    "GraphError",
    "IntegerMatrix",
    "MinorGcdProfile",
    "MinorSpec",
    "Multigraph",
    "PropertyId",
    "PropertyReport",
    "ReductionResult",
    "SnfResult",
    "StructureError",
    "StructureViolation",
    "check_conjecture_alpha",
    "check_conjecture_minors",
    "chio_condense",
    "critical_group",
    "desnanot_jacobi_residual",
    "determinant",
    "enumerate_structures",
    "fuzz_campaign",
    "laplacian_structure",
    "minor",
    "minor_gcd_all",
    "minor_gcd_corner",
    "minor_gcd_profile",
    "operation_matrix_consistency",
    "row_gcd",
    "sample_structure",
    "smith_normal_form",
    "star_clique_reduction",
    "structure_matrix",
    "validate_structure",
    "verify_minor_properties",
    "verify_operation_theorems",
]
