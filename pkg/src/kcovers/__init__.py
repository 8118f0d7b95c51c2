"""Exact counting of constructive k-covers of a finite set.

A family ``A_1, ..., A_k`` of subsets of ``{1..n}`` is a constructive cover
when the union is everything and no member contains another.  Counts are
built from integrated Stirling numbers and from labelings of Venn regions,
with symmetry reduction over a branching set.
"""

from .counting import count_labelings, count_ordered_covers, count_unordered_covers
from .enumerator import count_fixed, enumerate_fixed, solution_upper_bound
from .errors import (
    ArgumentError,
    ConsistencyError,
    InvalidCoverError,
    KCoverError,
    ResourceCapError,
)
from .index_space import Cover, IndexVector, full_index_space
from .labelings import (
    Labeling,
    ell0,
    labeling_of_cover,
    reconstruct_cover,
    satisfies_cover_constraints,
    weight,
)
from .reliability import (
    CoherentSystem,
    count_coherent_designs,
    is_constructive_cover,
    minimal_cut_sets,
    phi_from_cuts,
    phi_from_paths,
)
from .stirling import build_table, isn, stirling
from .symmetry import (
    BranchingAssignment,
    BranchingSet,
    EquivalenceClass,
    are_equivalent,
    impact_set,
    partition_classes,
    weight_offset,
)

__version__ = "0.1.0"
