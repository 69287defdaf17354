"""Exact combinatorics of symmetric and dual symmetric Grothendieck
polynomials: tableau families, generating series, Schur expansions, the
structural bijections between them, and exhaustive identity verifiers.
"""

from .bijections import (
    BijectionError,
    JdtPair,
    RskPair,
    iota,
    jdt_backward,
    jdt_forward,
    order_swap_down,
    order_swap_up,
    reorder,
    rsk_backward,
    rsk_forward,
    split,
    superimpose,
    swap_path,
    unprimed_count,
)
from .core import (
    EMPTY_TABLEAU,
    FAMILIES,
    BoxFill,
    L,
    Letter,
    P,
    Tableau,
    TotalOrder,
    ValidationError,
    dumps_tableau,
    flag_weight,
    left_weight,
    letter_from_json,
    letter_to_json,
    loads_tableau,
    overweight,
    parse_letter,
    pft_key,
    right_weight,
    tableau_from_json,
    tableau_to_json,
    underweight,
    validate,
    validate_pt_order,
)
from .enumeration import (
    EnumBounds,
    enum_OFT,
    enum_OT,
    enum_PFT,
    enum_PT,
    enum_PT_order,
    enum_UFT,
    enum_UT,
    enum_family,
)
from .series import Series, Truncation, groth, groth_dual, monomial, refined
from .shapes import (
    Part,
    ShapeError,
    SkewShape,
    check_partition,
    conjugate,
    contains,
    partitions_of,
    partitions_up_to,
    straight,
    subpartitions,
    subpartitions_same_rows,
    superpartitions_same_rows,
)
from .symfunc import (
    DoubleSchurExpansion,
    ExpansionError,
    SchurExpansion,
    ZPoly,
    build_series,
    expand_schur,
    expand_schur_xy,
    hall_pair,
    omega,
    pt_double_series,
    schur_expansion_from_json,
    schur_expansion_via_flags,
    schur_poly,
    skew_schur_poly,
    zpoly_from_json,
)
from .verify import (
    VERIFIERS,
    VerifyReport,
    verify_duo1,
    verify_duo2,
    verify_fact1,
    verify_fact2,
    verify_lemma_ordering,
    verify_lemma_rskjdt,
    verify_lemma_z,
)

__version__ = "0.1.0"
