import random
from itertools import permutations

import pytest

from treehopf.errors import ResourceLimitError, TreeSyntaxError
from treehopf.trees import (
    LEAF,
    Forest,
    enumerate_forests,
    enumerate_trees,
    graft_at,
    parse_forest,
    parse_tree,
    render,
    symmetry_factor,
)


def all_trees_up_to(n):
    for size in range(1, n + 1):
        yield from enumerate_trees(size)


# -- parsing and canonical form ----------------------------------------------

def test_parse_single_vertex():
    t = parse_tree("[]")
    assert t.vertex_count == 1
    assert t.edge_count == 0
    assert render(t) == "[]"


def test_parse_reorders_children():
    assert parse_tree("[[[]][]]").encoding == "[[][[]]]"


def test_parse_cherry():
    t = parse_tree("[[][]]")
    assert t.vertex_count == 3
    assert render(t) == "[[][]]"


def test_parse_allows_whitespace_between_siblings():
    assert parse_tree("[ [] [ [] ] ]").encoding == "[[][[]]]"


@pytest.mark.parametrize(
    "bad, position",
    [("[[]", 3), ("[]]", 2), ("[a]", 1), ("", 0), ("[] []", 0)],
)
def test_parse_errors_carry_position(bad, position):
    with pytest.raises(TreeSyntaxError) as err:
        parse_tree(bad)
    assert err.value.position == position


def test_parse_forest():
    f = parse_forest("[[]] []")
    assert [t.encoding for t in f] == ["[]", "[[]]"]
    assert parse_forest("").is_empty()
    assert parse_forest("1").is_empty()
    assert parse_forest("1").encoding == "1"


def test_round_trip_all_small_trees():
    for t in all_trees_up_to(6):
        assert parse_tree(render(t)) == t


def _ordered_spellings(tree, rng):
    """A few non-canonical spellings of the same tree."""
    def scramble(node):
        kids = [scramble(c) for c in node.children]
        rng.shuffle(kids)
        return "[" + "".join(kids) + "]"

    return [scramble(tree) for _ in range(4)]


def test_canonical_soundness_under_reordering():
    rng = random.Random(7)
    for t in all_trees_up_to(6):
        for spelling in _ordered_spellings(t, rng):
            assert parse_tree(spelling) == t


# -- symmetry factors ----------------------------------------------------------

def brute_force_automorphisms(tree):
    """Count child permutations preserving isomorphism, recursively.

    Independent of the multiplicity formula used in symmetry_factor.
    """
    kids = tree.children
    fixing = sum(
        1
        for perm in permutations(range(len(kids)))
        if all(kids[i] == kids[perm[i]] for i in range(len(kids)))
    )
    result = fixing
    for child in kids:
        result *= brute_force_automorphisms(child)
    return result


@pytest.mark.parametrize(
    "encoding, expected",
    [("[]", 1), ("[[][]]", 2), ("[[][][]]", 6), ("[[[][]]]", 2), ("[[][[]]]", 1)],
)
def test_symmetry_fixtures(encoding, expected):
    assert symmetry_factor(parse_tree(encoding)) == expected


def test_symmetry_matches_brute_force():
    for t in all_trees_up_to(6):
        assert symmetry_factor(t) == brute_force_automorphisms(t)


# -- enumeration ----------------------------------------------------------------

def test_tree_counts_match_census():
    assert [len(enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 2, 4, 9, 20, 48, 115]


def test_enumeration_small_fixtures():
    assert [t.encoding for t in enumerate_trees(1)] == ["[]"]
    assert {t.encoding for t in enumerate_trees(3)} == {"[[[]]]", "[[][]]"}
    assert {t.encoding for t in enumerate_trees(4)} == {
        "[[[[]]]]",
        "[[][[]]]",
        "[[[][]]]",
        "[[][][]]",
    }


def test_enumeration_is_deduplicated_and_canonical():
    for n in range(1, 7):
        trees = enumerate_trees(n)
        assert len({t.encoding for t in trees}) == len(trees)
        assert all(t.vertex_count == n for t in trees)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_trees(0)
    with pytest.raises(ResourceLimitError):
        enumerate_trees(13)
    # The cap is a guard, not a hard limit.
    assert len(enumerate_trees(10, limit=10)) == 719


def test_forest_enumeration():
    assert [f.encoding for f in enumerate_forests(0, "vertex")] == ["1"]
    assert [f.encoding for f in enumerate_forests(0, "edge")] == ["1"]
    assert {f.encoding for f in enumerate_forests(2, "vertex")} == {"[[]]", "[] []"}
    assert {f.encoding for f in enumerate_forests(2, "edge")} == {
        "[[[]]]",
        "[[][]]",
        "[[]] [[]]",
    }
    # Forests with n vertices are counted by trees with n + 1 vertices.
    for n in range(0, 7):
        assert len(enumerate_forests(n, "vertex")) == len(enumerate_trees(n + 1))


def test_edge_graded_forests_have_no_bare_vertices():
    for d in range(0, 5):
        for f in enumerate_forests(d, "edge"):
            assert all(t.edge_count >= 1 for t in f)
            assert f.edge_count == d


# -- grafting at a vertex ---------------------------------------------------------

def test_graft_at_fixtures():
    chain = parse_tree("[[]]")
    assert graft_at(LEAF, LEAF, 0).encoding == "[[]]"
    assert graft_at(chain, chain, 0).encoding == "[[][[]]]"
    assert graft_at(chain, chain, 1).encoding == "[[[[]]]]"


def test_graft_at_index_errors():
    with pytest.raises(IndexError):
        graft_at(LEAF, LEAF, 1)
    with pytest.raises(IndexError):
        graft_at(LEAF, LEAF, -1)


def test_graft_at_total_multiplicity():
    # Grafting onto every vertex yields exactly vertex_count(stock) results.
    for stock in all_trees_up_to(5):
        for scion in all_trees_up_to(3):
            results = [graft_at(scion, stock, v) for v in range(stock.vertex_count)]
            assert len(results) == stock.vertex_count
            assert all(
                r.vertex_count == stock.vertex_count + scion.vertex_count
                for r in results
            )


# -- forests -----------------------------------------------------------------------

def test_forest_multiset_semantics():
    a = Forest([parse_tree("[[]]"), LEAF])
    b = Forest([LEAF, parse_tree("[[]]")])
    assert a == b
    assert hash(a) == hash(b)
    assert a.encoding == "[] [[]]"
    assert a.vertex_count == 3
    assert a.edge_count == 1


def test_forest_constructor_accepts_any_order():
    f = Forest([parse_tree("[[][]]"), LEAF, parse_tree("[[]]")])
    assert f.key == ("[]", "[[]]", "[[][]]")
