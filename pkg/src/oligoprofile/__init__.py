"""Exact profile counting for permutation groups of finite and infinite kind.

The expression language (`parse_expression`) names groups whose orbit
counts of n-element subsets grow polynomially; `profile_series` turns an
expression into an exact rational generating series, `truncate` builds a
finite stand-in group for cross-checking the counts, and the finite-group
toolkit (orbits, block systems, cycle indices, towers, orbit algebras)
backs everything up with concrete computations.
"""

from .blocks import (
    BlockSystem,
    Tower,
    action_on_blocks,
    all_block_systems,
    blockwise_stabilizer,
    check_four_blocks_lemma,
    is_block_system,
    is_primitive,
    minimal_block_system,
    parse_partition,
    serialize_partition,
    tower,
    towers_transport_equal,
    transported_entry,
)
from .errors import ExpressionParseError, OligoprofileError
from .oligo import (
    CanonicalBlockStructure,
    DirectProduct,
    FiniteAtom,
    FiniteBlocks,
    InfiniteBlocks,
    ProfileOneAtom,
    canonical_block_structure,
    format_expression,
    generator_degrees,
    growth,
    parse_expression,
    profile_series,
    verify_positivity,
)
from .oracle import Truncation, profile, truncate
from .orbit_algebra import (
    OrbitAlgebraElement,
    coset_representatives,
    element,
    express_element,
    express_in_subgroup,
    orbit_element,
    product,
    reynolds,
    structure_constant,
    translate,
    unit,
    zero,
)
from .perm import (
    FinitePermGroup,
    Permutation,
    SubsetOrbit,
    cyclic_group,
    direct_product,
    enumerate_elements,
    group_order,
    identity_group,
    is_normal,
    is_subgroup,
    normal_closure,
    parse_group_file,
    parse_permutation,
    point_orbits,
    profile_values,
    subgroup_index,
    subset_orbits,
    symmetric_group,
)
from .polya import CycleIndex, cycle_index, molien_series, subset_count_polynomial
from .series import ProfileSeries, asymptotics, coefficients

__version__ = "0.1.0"

__all__ = [
    "BlockSystem",
    "CanonicalBlockStructure",
    "CycleIndex",
    "DirectProduct",
    "ExpressionParseError",
    "FiniteAtom",
    "FiniteBlocks",
    "FinitePermGroup",
    "InfiniteBlocks",
    "OligoprofileError",
    "OrbitAlgebraElement",
    "Permutation",
    "ProfileOneAtom",
    "ProfileSeries",
    "SubsetOrbit",
    "Tower",
    "Truncation",
    "action_on_blocks",
    "all_block_systems",
    "asymptotics",
    "blockwise_stabilizer",
    "canonical_block_structure",
    "check_four_blocks_lemma",
    "coefficients",
    "coset_representatives",
    "cycle_index",
    "cyclic_group",
    "direct_product",
    "element",
    "enumerate_elements",
    "express_element",
    "express_in_subgroup",
    "format_expression",
    "generator_degrees",
    "group_order",
    "growth",
    "identity_group",
    "is_block_system",
    "is_normal",
    "is_primitive",
    "is_subgroup",
    "minimal_block_system",
    "molien_series",
    "normal_closure",
    "orbit_element",
    "parse_expression",
    "parse_group_file",
    "parse_partition",
    "parse_permutation",
    "point_orbits",
    "product",
    "profile",
    "profile_series",
    "profile_values",
    "reynolds",
    "serialize_partition",
    "structure_constant",
    "subgroup_index",
    "subset_count_polynomial",
    "subset_orbits",
    "symmetric_group",
    "tower",
    "towers_transport_equal",
    "translate",
    "transported_entry",
    "truncate",
    "unit",
    "verify_positivity",
    "zero",
]
