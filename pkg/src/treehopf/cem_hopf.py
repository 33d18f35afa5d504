"""The edge-graded Hopf algebra of rooted forests and its insertion products.

Here the coproduct contracts instead of cutting: a subforest of a tree is a
family of vertex-disjoint connected edge-subsets, each with at least one
edge, and the quotient collapses every component to a single vertex. Since
the components of any edge subset are automatically connected and disjoint,
subforests of a tree correspond exactly to its edge subsets.

The monomial basis consists of forests whose trees all have at least one
edge; the single-vertex tree is identified with the unit, so a forest mixing
it with larger trees is not a basis element and is rejected.

The insertion product is dual to contraction. ``insert_count`` counts
single-component subforests directly from the definition, while
``insert_sigma`` constructs results by blowing a vertex up into a tree and
redistributing its branches; the two routes are reconciled through symmetry
factors and cross-checked by the verification sweeps.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .errors import DomainError, InvariantError
from .linear import LinComb, tensor_key
from .trees import (
    Forest,
    RootedTree,
    enumerate_trees,
    replace_subtree,
    sort_key,
    symmetry_factor,
    tree_from_encoding,
)
from .ck_hopf import ForestKey, KIND_TREE, ck_render, merge_keys

KIND_CEM_TENSOR = "h-forest (x) h-forest"
KIND_PHI_TENSOR = "h-forest (x) ck-forest"


def h_render(key: ForestKey) -> str:
    """Display form on the edge-graded side, where the unit is the bare vertex."""
    return " ".join(key) if key else "[]"


def h_forest_key(forest: Forest) -> ForestKey:
    """Canonical key of a forest as a basis monomial of the edge-graded algebra.

    Single-vertex trees are units here: a forest of nothing but vertices is
    the unit (empty key), while mixing a bare vertex with larger trees does
    not name a basis element.
    """
    big = [t.encoding for t in forest.trees if t.edge_count > 0]
    if big and len(big) != len(forest.trees):
        raise DomainError(
            "a bare vertex next to larger trees is not a monomial of the "
            "edge-graded algebra"
        )
    return tuple(big)


# ---------------------------------------------------------------------------
# Vertex-indexed access
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_arrays(
    encoding: str,
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """(parents, children, paths) in preorder for the canonical tree."""
    tree = tree_from_encoding(encoding)
    parents: list[int] = []
    children: list[list[int]] = []
    paths: list[tuple[int, ...]] = []

    def walk(node: RootedTree, parent: int, path: tuple[int, ...]) -> int:
        index = len(parents)
        parents.append(parent)
        children.append([])
        paths.append(path)
        if parent >= 0:
            children[parent].append(index)
        for i, child in enumerate(node.children):
            walk(child, index, path + (i,))
        return index

    walk(tree, -1, ())
    return tuple(parents), tuple(tuple(c) for c in children), tuple(paths)


def _component_reps(parents: tuple[int, ...], chosen: frozenset[int]) -> list[int]:
    """Representative (topmost vertex) of each vertex's component, where the
    components are induced by the chosen edges (named by lower endpoints)."""
    reps = list(range(len(parents)))
    for v in range(1, len(parents)):
        if v in chosen:
            reps[v] = reps[parents[v]]
    return reps


def _component_tree(
    children: tuple[tuple[int, ...], ...], chosen: frozenset[int], top: int
) -> RootedTree:
    return RootedTree(
        _component_tree(children, chosen, v) for v in children[top] if v in chosen
    )


def _contract_chosen(encoding: str, chosen: frozenset[int]) -> RootedTree:
    parents, _, _ = _tree_arrays(encoding)
    reps = _component_reps(parents, chosen)
    quotient_children: dict[int, list[int]] = {}
    for v in range(1, len(parents)):
        if v not in chosen:
            quotient_children.setdefault(reps[parents[v]], []).append(v)

    def build(r: int) -> RootedTree:
        return RootedTree(build(v) for v in quotient_children.get(r, ()))

    return build(0)


class Subforest:
    """A family of vertex-disjoint connected edge-subsets of a host tree.

    Components are given as collections of child-position paths, each path
    naming the edge above that vertex. The empty family (trivial subforest)
    is allowed; its contraction is the host itself.
    """

    __slots__ = ("host", "components", "_chosen")

    def __init__(self, host: RootedTree, components=()):
        parents, _, paths = _tree_arrays(host.encoding)
        index_of = {p: i for i, p in enumerate(paths)}
        comps: list[frozenset[tuple[int, ...]]] = []
        seen_vertices: set[int] = set()
        chosen: set[int] = set()
        for component in components:
            edge_paths = frozenset(tuple(p) for p in component)
            if not edge_paths:
                raise DomainError("a subforest component needs at least one edge")
            vertices: set[int] = set()
            for p in edge_paths:
                v = index_of.get(p)
                if v is None or v == 0:
                    raise DomainError(f"no edge at path {p!r}")
                vertices.add(v)
                vertices.add(parents[v])
            # An edge subset of a tree is acyclic, so it is connected exactly
            # when it has one more vertex than edges.
            if len(vertices) != len(edge_paths) + 1:
                raise DomainError("subforest component is not connected")
            if vertices & seen_vertices:
                raise DomainError("subforest components overlap")
            seen_vertices |= vertices
            chosen |= {index_of[p] for p in edge_paths}
            comps.append(edge_paths)
        self.host = host
        self.components = tuple(sorted(comps, key=sorted))
        self._chosen = frozenset(chosen)

    @classmethod
    def from_edges(cls, host: RootedTree, edge_paths) -> "Subforest":
        """Build from a bare edge set, splitting it into components."""
        parents, _, paths = _tree_arrays(host.encoding)
        index_of = {p: i for i, p in enumerate(paths)}
        chosen = frozenset(index_of[tuple(p)] for p in edge_paths)
        reps = _component_reps(parents, chosen)
        groups: dict[int, list[tuple[int, ...]]] = {}
        for v in chosen:
            groups.setdefault(reps[v], []).append(paths[v])
        return cls(host, groups.values())

    @property
    def edge_count(self) -> int:
        return len(self._chosen)

    @property
    def as_forest(self) -> Forest:
        """The components as rooted trees (rooted nearest the host root)."""
        parents, children, _ = _tree_arrays(self.host.encoding)
        reps = _component_reps(parents, self._chosen)
        tops = {reps[v] for v in self._chosen}
        return Forest(
            _component_tree(children, self._chosen, top) for top in tops
        )

    @property
    def contraction(self) -> RootedTree:
        return _contract_chosen(self.host.encoding, self._chosen)

    def __repr__(self) -> str:
        return f"Subforest({self.host.encoding!r}, {[sorted(c) for c in self.components]})"


def subforests(tree: RootedTree) -> list[Subforest]:
    """All subforests of the tree, one per edge subset (the trivial empty
    family and the full edge set included)."""
    _, _, paths = _tree_arrays(tree.encoding)
    edges = paths[1:]
    out = []
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            out.append(Subforest.from_edges(tree, subset))
    return out


def contract(tree: RootedTree, subforest: Subforest) -> RootedTree:
    """Collapse every component of the subforest to a point."""
    if subforest.host != tree:
        raise DomainError("subforest belongs to a different host tree")
    return subforest.contraction


# ---------------------------------------------------------------------------
# Coproduct and coaction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _subforest_pairs(encoding: str) -> dict[tuple[ForestKey, str], int]:
    """(components-forest key, contraction encoding) -> multiplicity, over
    all edge subsets of the tree."""
    parents, children, _ = _tree_arrays(encoding)
    n = len(parents)
    table: dict[tuple[ForestKey, str], int] = {}
    for bits in range(1 << (n - 1)):
        chosen = frozenset(v for v in range(1, n) if bits & (1 << (v - 1)))
        reps = _component_reps(parents, chosen)
        tops = {reps[v] for v in chosen}
        left = tuple(
            sorted(
                (_component_tree(children, chosen, top).encoding for top in tops),
                key=sort_key,
            )
        )
        right = _contract_chosen(encoding, chosen).encoding
        key = (left, right)
        table[key] = table.get(key, 0) + 1
    return table


@lru_cache(maxsize=None)
def cem_coproduct_table(forest_key: ForestKey) -> dict[tuple[ForestKey, ForestKey], int]:
    """Contraction coproduct of a basis monomial, both legs in the
    edge-graded algebra (contractions to a bare vertex become the unit)."""
    table: dict[tuple[ForestKey, ForestKey], int] = {((), ()): 1}
    for encoding in forest_key:
        factor = {
            (left, () if right == "[]" else (right,)): c
            for (left, right), c in _subforest_pairs(encoding).items()
        }
        merged: dict[tuple[ForestKey, ForestKey], int] = {}
        for (l1, r1), c1 in table.items():
            for (l2, r2), c2 in factor.items():
                key = (merge_keys(l1, l2), merge_keys(r1, r2))
                merged[key] = merged.get(key, 0) + c1 * c2
        table = merged
    return table


@lru_cache(maxsize=None)
def phi_table(ck_forest_key: ForestKey) -> dict[tuple[ForestKey, ForestKey], int]:
    """Coaction table: left leg a subforest monomial (edge-graded), right leg
    the contracted forest in the vertex-graded algebra.

    On the empty forest this is unit (x) empty; on trees it agrees with the
    contraction coproduct; on products it is multiplicative.
    """
    table: dict[tuple[ForestKey, ForestKey], int] = {((), ()): 1}
    for encoding in ck_forest_key:
        factor = {
            (left, (right,)): c
            for (left, right), c in _subforest_pairs(encoding).items()
        }
        merged: dict[tuple[ForestKey, ForestKey], int] = {}
        for (l1, r1), c1 in table.items():
            for (l2, r2), c2 in factor.items():
                key = (merge_keys(l1, l2), merge_keys(r1, r2))
                merged[key] = merged.get(key, 0) + c1 * c2
        table = merged
    return table


def coproduct_cem(forest: Forest) -> LinComb:
    """The contraction coproduct of a basis monomial of the edge-graded
    algebra, as a combination of forest (x) forest terms."""
    key = h_forest_key(forest)
    table = cem_coproduct_table(key)
    return LinComb(
        KIND_CEM_TENSOR,
        [(tensor_key(h_render(l), h_render(r)), c) for (l, r), c in table.items()],
    )


def coaction(forest: Forest) -> LinComb:
    """The comodule coaction on the vertex-graded algebra."""
    table = phi_table(forest.key)
    return LinComb(
        KIND_PHI_TENSOR,
        [(tensor_key(h_render(l), ck_render(r)), c) for (l, r), c in table.items()],
    )


# ---------------------------------------------------------------------------
# Insertion
# ---------------------------------------------------------------------------

def insert_count(tree: RootedTree, target: RootedTree, host: RootedTree) -> int:
    """Number of single-component subforests of ``host`` isomorphic to
    ``tree`` whose contraction is isomorphic to ``target``.

    Counts straight from the definition by scanning connected edge subsets;
    this is the slow, independent oracle for the insertion product.
    """
    if tree.edge_count < 1:
        raise DomainError("the inserted tree must have at least one edge")
    k = tree.edge_count
    if host.edge_count < k:
        return 0
    parents, children, _ = _tree_arrays(host.encoding)
    n = len(parents)
    count = 0
    for chosen_tuple in combinations(range(1, n), k):
        chosen = frozenset(chosen_tuple)
        reps = _component_reps(parents, chosen)
        tops = {reps[v] for v in chosen}
        if len(tops) != 1:
            continue
        component = _component_tree(children, chosen, next(iter(tops)))
        if component != tree:
            continue
        if _contract_chosen(host.encoding, chosen) == target:
            count += 1
    return count


def _attach(tree: RootedTree, extra: dict[int, tuple[RootedTree, ...]]) -> RootedTree:
    """Add the given subtrees as children of the vertices of ``tree`` named
    by preorder index."""
    counter = iter(range(tree.vertex_count))

    def rebuild(node: RootedTree) -> RootedTree:
        index = next(counter)
        kids = [rebuild(c) for c in node.children]
        kids.extend(extra.get(index, ()))
        return RootedTree(kids)

    return rebuild(tree)


@lru_cache(maxsize=None)
def _insertion_ways(tree_enc: str, target_enc: str) -> tuple[tuple[str, int], ...]:
    """Count the ways of blowing one vertex of the target up into the tree.

    The blown vertex's branches may reattach below any vertex of the inserted
    tree, and its own parent edge lands on the inserted root; every choice is
    one way, collected by resulting tree.
    """
    tree = tree_from_encoding(tree_enc)
    target = tree_from_encoding(target_enc)
    counts: dict[str, int] = {}
    nodes: list[tuple[int, RootedTree]] = []

    def collect(node: RootedTree, index: int) -> int:
        nodes.append((index, node))
        next_index = index + 1
        for child in node.children:
            next_index = collect(child, next_index)
        return next_index

    collect(target, 0)
    for index, node in nodes:
        branches = node.children
        for assignment in product(range(tree.vertex_count), repeat=len(branches)):
            extra: dict[int, tuple[RootedTree, ...]] = {}
            for where, branch in zip(assignment, branches):
                extra[where] = extra.get(where, ()) + (branch,)
            blown = _attach(tree, extra)
            made = replace_subtree(target, index, blown)
            counts[made.encoding] = counts.get(made.encoding, 0) + 1
    return tuple(sorted(counts.items(), key=lambda kv: sort_key(kv[0])))


def insert_sigma(tree: RootedTree, target: RootedTree) -> LinComb:
    """Symmetry-weighted insertion: the number of ways of inserting ``tree``
    into ``target``, collected by result."""
    if tree.edge_count < 1:
        raise DomainError("left operand of insert must have >= 1 edge")
    return LinComb(KIND_TREE, _insertion_ways(tree.encoding, target.encoding))


def insert(tree: RootedTree, target: RootedTree) -> LinComb:
    """Insertion product: the coefficient of w counts single-component
    subforests of w isomorphic to ``tree`` contracting to ``target``.

    Results satisfy edges(w) = edges(tree) + edges(target) and
    vertices(w) = vertices(tree) + vertices(target) - 1.
    """
    if tree.edge_count < 1:
        raise DomainError("left operand of insert must have >= 1 edge")
    base = symmetry_factor(tree) * symmetry_factor(target)
    terms = []
    for enc, ways in _insertion_ways(tree.encoding, target.encoding):
        coeff = Fraction(ways * symmetry_factor(tree_from_encoding(enc)), base)
        if coeff.denominator != 1:
            raise InvariantError(
                f"insertion count for {enc} is not an integer: {coeff}"
            )
        terms.append((enc, coeff))
    return LinComb(KIND_TREE, terms)


def insert_by_counting(tree: RootedTree, target: RootedTree) -> LinComb:
    """Insertion computed from the definition, by enumerating all candidate
    results and counting subforests. Slow; used to cross-check ``insert``."""
    if tree.edge_count < 1:
        raise DomainError("left operand of insert must have >= 1 edge")
    n = tree.vertex_count + target.vertex_count - 1
    terms = []
    for host in enumerate_trees(n):
        c = insert_count(tree, target, host)
        if c:
            terms.append((host.encoding, c))
    return LinComb(KIND_TREE, terms)


def insert_bracket(a: RootedTree, b: RootedTree) -> LinComb:
    """Lie bracket induced by insertion: insert(a, b) - insert(b, a)."""
    return insert(a, b) - insert(b, a)
