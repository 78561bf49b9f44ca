"""Exact combinatorics of two-row partition categories.

Submodules:

* ``partition``: the partition data type, text grammar, boundary walk
* ``ops``      : tensor, composition with loop counting, involution, rotation
* ``catalog``  : named partitions and category membership predicates
* ``closure``  : bounded categorial hulls and classification
* ``linmap``   : exact intertwiner matrices and concrete group checks
* ``moments``  : character-law counts, closed forms, cumulant sums
* ``cli``      : command-line entry point
"""

from .partition import (
    BlockProfile,
    Partition,
    Point,
    block_profile,
    canonical_text,
    is_noncrossing,
    linearize,
    make_partition,
    parse_partition,
)
from .ops import ComposeResult, Rotation, compose, enumerate_all, involute, rotate, tensor
from .catalog import (
    CATALOG,
    CatalogEntry,
    category_predicate,
    enumerate_category,
    named_partition,
)
from .closure import (
    Classification,
    ClosureSet,
    Containment,
    classify_classical,
    classify_easy,
    classify_noncrossing,
    closure_contains,
    generate_closure,
)
from .linmap import (
    GroupRep,
    IntertwinerMatrix,
    check_functor,
    check_intertwiner,
    classical_rep,
    delta,
    t_matrix,
)
from .moments import (
    CumulantSpec,
    MomentSequence,
    closed_form,
    count_moments,
    moments_from_cumulants,
    squeeze,
    symmetrize,
    transform,
)

__version__ = "0.1.0"

__all__ = [
    "BlockProfile",
    "CATALOG",
    "CatalogEntry",
    "Classification",
    "ClosureSet",
    "ComposeResult",
    "Containment",
    "CumulantSpec",
    "GroupRep",
    "IntertwinerMatrix",
    "MomentSequence",
    "Partition",
    "Point",
    "Rotation",
    "block_profile",
    "canonical_text",
    "category_predicate",
    "check_functor",
    "check_intertwiner",
    "classical_rep",
    "classify_classical",
    "classify_easy",
    "classify_noncrossing",
    "closed_form",
    "closure_contains",
    "compose",
    "count_moments",
    "delta",
    "enumerate_all",
    "enumerate_category",
    "generate_closure",
    "involute",
    "is_noncrossing",
    "linearize",
    "make_partition",
    "moments_from_cumulants",
    "named_partition",
    "parse_partition",
    "rotate",
    "squeeze",
    "symmetrize",
    "t_matrix",
    "tensor",
    "transform",
]
