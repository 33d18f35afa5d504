"""Exact computer algebra on rooted-tree Hopf algebras.

Two graded Hopf algebras on rooted forests live here: the vertex-graded one
whose coproduct cuts trees apart, and the edge-graded one whose coproduct
contracts subforests. Each carries a pair of pre-Lie products (grafting and
insertion, plain and symmetry-weighted), the graded duals carry convolution
products and a module action, and a verification engine sweeps every
identity exhaustively over all trees up to a size bound.
"""

from .errors import DomainError, InvariantError, ResourceLimitError, TreeSyntaxError
from .trees import (
    Forest,
    LEAF,
    RootedTree,
    enumerate_forests,
    enumerate_trees,
    graft_at,
    parse_forest,
    parse_tree,
    render,
    symmetry_factor,
)
from .linear import (
    LinComb,
    Rational,
    lincomb_add,
    lincomb_scale,
    lincomb_tensor,
    symmetry_rescale,
    symmetry_rescale_inverse,
)
from .ck_hopf import (
    Cut,
    admissible_cuts,
    coproduct_ck,
    graft,
    graft_bracket,
    graft_count,
    graft_sigma,
)
from .cem_hopf import (
    Subforest,
    coaction,
    contract,
    coproduct_cem,
    insert,
    insert_bracket,
    insert_by_counting,
    insert_count,
    insert_sigma,
    subforests,
)
from .dual import (
    DualElement,
    act,
    convolve_cem,
    convolve_ck,
    dual_coproduct,
    pair,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
