"""Coset-partition search over prime fields and relation-algebra verification."""

from comeralg.comer_checkers import (
    CheckReport,
    CongruenceError,
    Variant,
    Violation,
    candidate_primes,
    check,
    required_masks,
    search_smallest,
)
from comeralg.coset_cycles import (
    CosetSystem,
    InvalidIndexError,
    ParityError,
    SumClassTable,
    brute_force_sum_classes,
    build_coset_system,
    cycle_list,
    find_witness,
    sum_class_table,
    table_matches_oracle,
)
from comeralg.field_core import (
    MAX_MODULUS,
    FieldContext,
    build_context,
    factorize,
    find_primitive_root,
    is_prime,
)
from comeralg.kernels import BACKEND
from comeralg.ra_verify import (
    AtomStructure,
    RepFormatError,
    Representation,
    StructureError,
    VerifyProblem,
    VerifyReport,
    expected_comp,
    flexible_atoms,
    format_rep,
    image_comp_classes,
    parse_rep_file,
    peircean_closure,
    search_embedding,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AtomStructure",
    "BACKEND",
    "CheckReport",
    "CongruenceError",
    "CosetSystem",
    "FieldContext",
    "InvalidIndexError",
    "MAX_MODULUS",
    "ParityError",
    "RepFormatError",
    "Representation",
    "StructureError",
    "SumClassTable",
    "Variant",
    "VerifyProblem",
    "VerifyReport",
    "Violation",
    "brute_force_sum_classes",
    "build_context",
    "build_coset_system",
    "candidate_primes",
    "check",
    "cycle_list",
    "expected_comp",
    "factorize",
    "find_primitive_root",
    "find_witness",
    "flexible_atoms",
    "format_rep",
    "image_comp_classes",
    "is_prime",
    "parse_rep_file",
    "peircean_closure",
    "required_masks",
    "search_embedding",
    "search_smallest",
    "sum_class_table",
    "table_matches_oracle",
    "verify",
]
