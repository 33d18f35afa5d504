"""The vertex-graded Hopf algebra of rooted forests and its grafting products.

The coproduct cuts trees: an admissible cut is a nonempty set of edges no two
of which lie on the same root-to-vertex path. Cutting detaches a forest of
crowns (the pruning) and leaves the component containing the root (the
trunk). The grafting product of two trees is dual to single-edge cuts: the
coefficient of x in ``graft(t, u)`` counts the elementary cuts of x with
crown t and trunk u.

Two deliberately disjoint code paths live here. ``graft`` enumerates all
candidate result trees and counts cuts; ``graft_sigma`` never looks at cuts
and instead attaches the first tree below every vertex of the second. Their
compatibility through symmetry factors is checked by the verification
sweeps, which is the point of keeping the paths separate.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .linear import LinComb, tensor_key
from .trees import (
    Forest,
    RootedTree,
    enumerate_trees,
    graft_at,
    sort_key,
    tree_from_encoding,
)

ForestKey = tuple[str, ...]

KIND_TREE = "tree"
KIND_CK_TENSOR = "ck-forest (x) ck-forest"


def ck_render(key: ForestKey) -> str:
    """Display form of a forest monomial; the empty forest is the unit '1'."""
    return " ".join(key) if key else "1"


def merge_keys(a: ForestKey, b: ForestKey) -> ForestKey:
    return tuple(sorted(a + b, key=sort_key))


class Cut:
    """An admissible cut of a host tree.

    ``edges`` are child-position paths naming the edge above each cut vertex;
    admissibility means the paths form an antichain under prefix order.
    """

    __slots__ = ("host", "edges", "pruning", "trunk")

    def __init__(
        self,
        host: RootedTree,
        edges: frozenset[tuple[int, ...]],
        pruning: Forest,
        trunk: RootedTree,
    ):
        self.host = host
        self.edges = edges
        self.pruning = pruning
        self.trunk = trunk

    @property
    def is_elementary(self) -> bool:
        return len(self.edges) == 1

    def __repr__(self) -> str:
        return (
            f"Cut(edges={sorted(self.edges)}, pruning={self.pruning.encoding!r}, "
            f"trunk={self.trunk.encoding!r})"
        )


def _cuts_with_empty(
    node: RootedTree, path: tuple[int, ...]
) -> list[tuple[tuple[tuple[int, ...], ...], tuple[RootedTree, ...], RootedTree]]:
    """All admissible cuts of the subtree at ``path``, including the empty one.

    Per child the edge above it is either cut (detaching the whole child) or
    kept, in which case any cut of the child applies; admissibility is
    automatic because choices on disjoint branches are independent.
    """
    per_child = []
    for i, child in enumerate(node.children):
        edge = path + (i,)
        options = [((edge,), (child,), None)]
        options.extend(_cuts_with_empty(child, edge))
        per_child.append(options)
    results = []
    for combo in itertools.product(*per_child):
        edges = sum((opt[0] for opt in combo), ())
        prunings = sum((opt[1] for opt in combo), ())
        kept = [opt[2] for opt in combo if opt[2] is not None]
        results.append((edges, prunings, RootedTree(kept)))
    return results


def admissible_cuts(tree: RootedTree) -> list[Cut]:
    """Every admissible cut of the tree, with its pruning and trunk.

    A tree without edges has none. Vertices always split as
    vertices(pruning) + vertices(trunk) = vertices(tree).
    """
    cuts = []
    for edges, prunings, trunk in _cuts_with_empty(tree, ()):
        if edges:
            cuts.append(Cut(tree, frozenset(edges), Forest(prunings), trunk))
    return cuts


@lru_cache(maxsize=None)
def _tree_coproduct_table(encoding: str) -> dict[tuple[ForestKey, ForestKey], int]:
    tree = tree_from_encoding(encoding)
    table: dict[tuple[ForestKey, ForestKey], int] = {
        ((), (encoding,)): 1,
        ((encoding,), ()): 1,
    }
    for cut in admissible_cuts(tree):
        key = (cut.pruning.key, (cut.trunk.encoding,))
        table[key] = table.get(key, 0) + 1
    return table


@lru_cache(maxsize=None)
def ck_coproduct_table(forest_key: ForestKey) -> dict[tuple[ForestKey, ForestKey], int]:
    """Tensor expansion of the cut coproduct on a forest monomial.

    Multiplicative over the trees of the forest; the unit is grouplike.
    """
    table: dict[tuple[ForestKey, ForestKey], int] = {((), ()): 1}
    for encoding in forest_key:
        factor = _tree_coproduct_table(encoding)
        merged: dict[tuple[ForestKey, ForestKey], int] = {}
        for (l1, r1), c1 in table.items():
            for (l2, r2), c2 in factor.items():
                key = (merge_keys(l1, l2), merge_keys(r1, r2))
                merged[key] = merged.get(key, 0) + c1 * c2
        table = merged
    return table


def coproduct_ck(forest: Forest) -> LinComb:
    """The cut coproduct, as a combination of forest (x) forest terms."""
    table = ck_coproduct_table(forest.key)
    return LinComb(
        KIND_CK_TENSOR,
        [
            (tensor_key(ck_render(l), ck_render(r)), c)
            for (l, r), c in table.items()
        ],
    )


# ---------------------------------------------------------------------------
# Grafting
# ---------------------------------------------------------------------------

def _delete_subtree(tree: RootedTree, path: tuple[int, ...]) -> RootedTree:
    if len(path) == 1:
        kids = list(tree.children)
        del kids[path[0]]
        return RootedTree(kids)
    kids = list(tree.children)
    kids[path[0]] = _delete_subtree(kids[path[0]], path[1:])
    return RootedTree(kids)


@lru_cache(maxsize=None)
def _elementary_cut_pairs(encoding: str) -> tuple[tuple[str, str], ...]:
    """(crown, trunk) encodings over all single-edge cuts of the tree."""
    tree = tree_from_encoding(encoding)
    pairs = []

    def walk(node: RootedTree, path: tuple[int, ...]) -> None:
        for i, child in enumerate(node.children):
            edge = path + (i,)
            pairs.append((child.encoding, _delete_subtree(tree, edge).encoding))
            walk(child, edge)

    walk(tree, ())
    return tuple(pairs)


def graft_count(pruned: RootedTree, trunk: RootedTree, host: RootedTree) -> int:
    """Number of elementary cuts of ``host`` detaching ``pruned`` and leaving
    ``trunk``."""
    want = (pruned.encoding, trunk.encoding)
    return sum(1 for pair in _elementary_cut_pairs(host.encoding) if pair == want)


@lru_cache(maxsize=None)
def _graft_index(n: int) -> dict[tuple[str, str], dict[str, int]]:
    """For every tree with n vertices, bucket its elementary cuts by
    (crown, trunk); grafting then reads one bucket."""
    index: dict[tuple[str, str], dict[str, int]] = {}
    for host in enumerate_trees(n):
        for pair in _elementary_cut_pairs(host.encoding):
            bucket = index.setdefault(pair, {})
            bucket[host.encoding] = bucket.get(host.encoding, 0) + 1
    return index


def graft(tree: RootedTree, onto: RootedTree) -> LinComb:
    """Grafting product: sum over all trees x of the number of elementary
    cuts of x with crown ``tree`` and trunk ``onto``, times x.

    Computed by enumeration and cut counting, never by attaching subtrees;
    the attachment route lives in graft_sigma so the two stay independent.
    """
    n = tree.vertex_count + onto.vertex_count
    bucket = _graft_index(n).get((tree.encoding, onto.encoding), {})
    return LinComb(KIND_TREE, bucket.items())


def graft_sigma(tree: RootedTree, onto: RootedTree) -> LinComb:
    """Symmetry-weighted grafting: attach ``tree`` below every vertex of
    ``onto`` and collect the results with multiplicity.

    Coefficients are automatically nonnegative integers and total to the
    vertex count of ``onto``; they equal the cut-counting coefficients
    rescaled by symmetry factors, which the verification sweeps check.
    """
    counts: dict[str, int] = {}
    for v in range(onto.vertex_count):
        enc = graft_at(tree, onto, v).encoding
        counts[enc] = counts.get(enc, 0) + 1
    return LinComb(KIND_TREE, counts.items())


def graft_bracket(a: RootedTree, b: RootedTree) -> LinComb:
    """Lie bracket induced by grafting: graft(a, b) - graft(b, a)."""
    return graft(a, b) - graft(b, a)


def tree_comb(tree: RootedTree, coeff: Fraction | int = 1) -> LinComb:
    return LinComb.single(KIND_TREE, tree.encoding, coeff)


def bilinear(product, a: LinComb, b: LinComb) -> LinComb:
    """Extend a product of basis trees bilinearly to combinations."""
    out = LinComb.zero(KIND_TREE)
    for ka, ca in a.terms.items():
        ta = tree_from_encoding(ka)
        for kb, cb in b.terms.items():
            out = out + product(ta, tree_from_encoding(kb)).scale(ca * cb)
    return out
