"""Skew Schur Q-functions through amenable shifted tableaux.

The main entry points are :func:`expand` for the Q-expansion of a skew
shape, :func:`classify` for deciding whether that expansion has a single
term, and :func:`canonical_tableau` for the lex-largest amenable tableau.
"""

from .amenability import (
    is_amenable,
    is_fitting,
    is_k_amenable,
    is_k_amenable_checklist,
    is_k_amenable_word,
    satisfies_sufficient,
)
from .canonical import canonical_tableau, leading_coefficient, lex_max_content
from .classification import Homogeneous, NotHomogeneous, Witness, classify, staircase_reduce
from .errors import (
    EmptyShape,
    InvalidPartition,
    InvalidShape,
    InvalidTableau,
    OutOfRange,
    ParseError,
    PreconditionViolated,
    ShiftedQError,
    SizeMismatch,
    WitnessError,
)
from .expansion import (
    QExpansion,
    amenable_tableaux,
    decompose_row_strip,
    expand,
    lambda_flip,
    lr_coefficient,
    monomial_oracle,
)
from .shapes import (
    EMPTY,
    SkewShape,
    StrictPartition,
    basic_shapes,
    normalize_basic,
    orthogonal_transpose,
    parse_partition,
    parse_shape,
    partition_difference,
)
from .tableaux import Tableau, content, format_tableau, letter, parse_tableau, reading_word

__all__ = [
    "EMPTY",
    "EmptyShape",
    "Homogeneous",
    "InvalidPartition",
    "InvalidShape",
    "InvalidTableau",
    "NotHomogeneous",
    "OutOfRange",
    "ParseError",
    "PreconditionViolated",
    "QExpansion",
    "ShiftedQError",
    "SizeMismatch",
    "SkewShape",
    "StrictPartition",
    "Tableau",
    "Witness",
    "WitnessError",
    "amenable_tableaux",
    "basic_shapes",
    "canonical_tableau",
    "classify",
    "content",
    "decompose_row_strip",
    "expand",
    "format_tableau",
    "is_amenable",
    "is_fitting",
    "is_k_amenable",
    "is_k_amenable_checklist",
    "is_k_amenable_word",
    "lambda_flip",
    "leading_coefficient",
    "letter",
    "lex_max_content",
    "lr_coefficient",
    "monomial_oracle",
    "normalize_basic",
    "orthogonal_transpose",
    "parse_partition",
    "parse_shape",
    "parse_tableau",
    "partition_difference",
    "reading_word",
    "satisfies_sufficient",
    "staircase_reduce",
]
