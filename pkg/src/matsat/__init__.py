"""Saturation of 0-1 matrix patterns: containment, classification and witnesses."""

from .catalog import APPENDIX_TABLE, CATALOG, builtin, classification_report
from .classify import (
    ClassLabel,
    OuterClass,
    anti_identity_occurrences,
    classify,
    is_once_separable,
    is_permutation,
    is_trivial,
    outer_class,
)
from .core import (
    ContractError,
    FormatError,
    Matrix,
    Occurrence,
    Pattern,
    SymmetryOp,
    apply_symmetry,
    as_pattern,
    contains,
    contains_using,
    format_matrix,
    parse_matrix,
)
from .search import (
    BudgetExceeded,
    SearchBudget,
    SymmetryGroup,
    canonical_form,
    enumerate_permutations,
    ex_exact,
    is_saturated,
    sat_exact,
)
from .witness import (
    VerificationError,
    WConstruction,
    WitnessReport,
    compose,
    construct_w,
    expandable_cols,
    expandable_rows,
    extend,
    saturate,
    verify,
)

__version__ = "0.1.0"
