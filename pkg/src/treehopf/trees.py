"""Canonical unordered rooted trees and forests.

A tree is written in bracket notation: ``[]`` is the single vertex, and
``[AB...]`` is a root whose child subtrees are ``A``, ``B``, ... . Children
are unordered; the canonical form sorts them by (encoding length, encoding),
so isomorphic trees always produce the identical string. The canonical
encoding is the interchange format everywhere (CLI, JSON, cache keys).

A forest is a multiset of trees. The empty forest is the monomial unit; how
it is displayed depends on the algebra it lives in, which is the caller's
business, not this module's.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ResourceLimitError, TreeSyntaxError

# Exhaustive enumeration guard. Degree-11 targets arise already when the
# default verification sweeps multiply two in-bound trees, so the cap must
# sit above the sweep bounds themselves.
MAX_ENUMERATION_VERTICES = 12


def sort_key(encoding: str) -> tuple[int, str]:
    """Total order on canonical encodings: shorter first, then lexicographic."""
    return (len(encoding), encoding)


class RootedTree:
    """An unordered rooted tree, stored in canonical form.

    Instances are immutable and hashable; two trees compare equal exactly
    when they are isomorphic as unordered rooted trees.
    """

    __slots__ = ("children", "encoding", "vertex_count")

    def __init__(self, children: Iterable["RootedTree"] = ()):
        kids = tuple(sorted(children, key=lambda c: sort_key(c.encoding)))
        self.children = kids
        self.encoding = "[" + "".join(c.encoding for c in kids) + "]"
        self.vertex_count = 1 + sum(c.vertex_count for c in kids)

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootedTree) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __lt__(self, other: "RootedTree") -> bool:
        return sort_key(self.encoding) < sort_key(other.encoding)

    def __repr__(self) -> str:
        return f"RootedTree({self.encoding!r})"


LEAF = RootedTree()


class Forest:
    """A multiset of canonical rooted trees (possibly empty)."""

    __slots__ = ("trees", "key")

    def __init__(self, trees: Iterable[RootedTree] = ()):
        ts = tuple(sorted(trees, key=lambda t: sort_key(t.encoding)))
        self.trees = ts
        self.key = tuple(t.encoding for t in ts)

    @property
    def vertex_count(self) -> int:
        return sum(t.vertex_count for t in self.trees)

    @property
    def edge_count(self) -> int:
        return sum(t.edge_count for t in self.trees)

    @property
    def encoding(self) -> str:
        """Neutral spelling: '1' for the empty multiset, else the trees."""
        return " ".join(self.key) if self.key else "1"

    def is_empty(self) -> bool:
        return not self.trees

    def union(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Forest) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __iter__(self) -> Iterator[RootedTree]:
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def __repr__(self) -> str:
        return f"Forest({self.encoding!r})"


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

def _parse_trees(text: str) -> list[RootedTree]:
    """Parse a whitespace-separated sequence of bracket trees."""
    stack: list[list[RootedTree]] = []
    top: list[RootedTree] = []
    for pos, ch in enumerate(text):
        if ch == "[":
            stack.append([])
        elif ch == "]":
            if not stack:
                raise TreeSyntaxError("unmatched ']'", pos)
            done = RootedTree(stack.pop())
            (stack[-1] if stack else top).append(done)
        elif ch.isspace():
            continue
        else:
            raise TreeSyntaxError(f"unexpected character {ch!r}", pos)
    if stack:
        raise TreeSyntaxError("unclosed '['", len(text))
    return top


def parse_tree(text: str) -> RootedTree:
    """Parse bracket notation into a canonical tree.

    Exactly one tree must be present; children are recursively sorted, so
    any ordered spelling of the same tree parses to the same object.
    """
    trees = _parse_trees(text)
    if not trees:
        raise TreeSyntaxError("expected a tree", 0)
    if len(trees) > 1:
        raise TreeSyntaxError("expected a single tree, found several", 0)
    return trees[0]


def parse_forest(text: str) -> Forest:
    """Parse whitespace-separated bracket trees into a forest.

    The empty string and the spelling '1' both denote the empty forest.
    """
    if text.strip() in ("", "1"):
        return Forest()
    return Forest(_parse_trees(text))


def render(tree: RootedTree) -> str:
    """The unique canonical encoding; inverse of parse_tree."""
    return tree.encoding


# ---------------------------------------------------------------------------
# Symmetry
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _symmetry_from_encoding(encoding: str) -> int:
    return symmetry_factor(parse_tree(encoding))


def symmetry_factor(tree: RootedTree) -> int:
    """Number of automorphisms of the rooted tree.

    Equal children may be permuted freely and each child contributes its own
    automorphisms, hence the product of m! * sigma(child)^m over isomorphism
    classes of children with multiplicity m.
    """
    result = 1
    for encoding, group in itertools.groupby(tree.children, key=lambda c: c.encoding):
        m = len(list(group))
        result *= math.factorial(m) * _symmetry_from_encoding(encoding) ** m
    return result


@lru_cache(maxsize=None)
def tree_from_encoding(encoding: str) -> RootedTree:
    return parse_tree(encoding)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _check_cap(vertices: int, limit: int | None) -> None:
    cap = MAX_ENUMERATION_VERTICES if limit is None else limit
    if vertices > cap:
        raise ResourceLimitError(
            f"enumeration of trees with {vertices} vertices exceeds the cap {cap}"
        )


@lru_cache(maxsize=None)
def _trees_with_vertices(n: int) -> tuple[RootedTree, ...]:
    if n == 1:
        return (LEAF,)
    out = [RootedTree(kids) for kids in _tree_multisets(n - 1, n - 1, _vertex_source)]
    out.sort(key=lambda t: sort_key(t.encoding))
    return tuple(out)


def _vertex_source(size: int) -> tuple[RootedTree, ...]:
    return _trees_with_vertices(size)


def _edge_source(size: int) -> tuple[RootedTree, ...]:
    return _trees_with_vertices(size + 1)


def _tree_multisets(
    total: int, max_part: int, source
) -> Iterator[tuple[RootedTree, ...]]:
    """All multisets of trees whose sizes sum to ``total``.

    Sizes are taken in decreasing blocks, and trees of equal size are chosen
    with combinations-with-replacement, so every multiset appears exactly once.
    """
    if total == 0:
        yield ()
        return
    for part in range(min(total, max_part), 0, -1):
        pool = source(part)
        for count in range(1, total // part + 1):
            rest_total = total - part * count
            for chosen in itertools.combinations_with_replacement(pool, count):
                for rest in _tree_multisets(rest_total, part - 1, source):
                    yield chosen + rest


def enumerate_trees(n: int, *, limit: int | None = None) -> list[RootedTree]:
    """All isomorphism classes of rooted trees with n vertices, each once.

    Sorted by canonical encoding. Sizes follow 1, 1, 2, 4, 9, 20, 48, 115, ...
    """
    if n < 1:
        raise ValueError(f"vertex count must be >= 1, got {n}")
    _check_cap(n, limit)
    return list(_trees_with_vertices(n))


def enumerate_forests(
    degree: int, grading: str = "vertex", *, limit: int | None = None
) -> list[Forest]:
    """All forests of the given total degree.

    grading='vertex': multisets of arbitrary trees with ``degree`` vertices
    in total (monomial basis graded by vertices). grading='edge': multisets
    of trees that each have at least one edge, with ``degree`` edges in total
    (monomial basis graded by edges). Degree 0 gives the empty forest.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    if grading == "vertex":
        _check_cap(degree, limit)
        source = _vertex_source
    elif grading == "edge":
        _check_cap(degree + 1, limit)
        source = _edge_source
    else:
        raise ValueError(f"unknown grading {grading!r}")
    out = [Forest(ms) for ms in _tree_multisets(degree, degree, source)]
    out.sort(key=lambda f: tuple(sort_key(e) for e in f.key))
    return out


# ---------------------------------------------------------------------------
# Vertex addressing and grafting
# ---------------------------------------------------------------------------

def preorder_paths(tree: RootedTree) -> list[tuple[int, ...]]:
    """Child-position paths of all vertices, in preorder of the canonical form.

    The root is (), its i-th child is (i,), and so on. The path of a non-root
    vertex doubles as the name of the edge above it.
    """
    paths: list[tuple[int, ...]] = []

    def walk(node: RootedTree, path: tuple[int, ...]) -> None:
        paths.append(path)
        for i, child in enumerate(node.children):
            walk(child, path + (i,))

    walk(tree, ())
    return paths


def subtree_at(tree: RootedTree, path: tuple[int, ...]) -> RootedTree:
    node = tree
    for i in path:
        node = node.children[i]
    return node


def graft_at(scion: RootedTree, stock: RootedTree, vertex: int) -> RootedTree:
    """Attach ``scion`` as a new child of the vertex of ``stock`` with the
    given preorder index, and return the canonical result."""
    if not 0 <= vertex < stock.vertex_count:
        raise IndexError(
            f"vertex index {vertex} out of range for a tree with "
            f"{stock.vertex_count} vertices"
        )
    counter = itertools.count()

    def rebuild(node: RootedTree) -> RootedTree:
        here = next(counter) == vertex
        kids = [rebuild(c) for c in node.children]
        if here:
            kids.append(scion)
        return RootedTree(kids)

    return rebuild(stock)


def replace_subtree(tree: RootedTree, vertex: int, replacement: RootedTree) -> RootedTree:
    """Swap the whole subtree rooted at the given preorder index."""
    if not 0 <= vertex < tree.vertex_count:
        raise IndexError(f"vertex index {vertex} out of range")
    counter = itertools.count()

    def rebuild(node: RootedTree) -> RootedTree:
        if next(counter) == vertex:
            # Skip the preorder indices buried in the replaced subtree.
            for _ in range(node.vertex_count - 1):
                next(counter)
            return replacement
        return RootedTree(rebuild(c) for c in node.children)

    return rebuild(tree)
