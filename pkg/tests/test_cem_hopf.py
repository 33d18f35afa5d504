from collections import Counter

import pytest

from treehopf.errors import DomainError
from treehopf.linear import LinComb
from treehopf.trees import LEAF, Forest, enumerate_trees, parse_tree
from treehopf.ck_hopf import KIND_TREE
from treehopf.cem_hopf import (
    Subforest,
    coaction,
    contract,
    coproduct_cem,
    h_forest_key,
    insert,
    insert_by_counting,
    insert_count,
    insert_sigma,
    subforests,
)

CHAIN = parse_tree("[[]]")
CHERRY = parse_tree("[[][]]")
BRANCHED = parse_tree("[[][[]]]")
STALK_CHERRY = parse_tree("[[[][]]]")
COROLLA = parse_tree("[[][][]]")


# -- subforests and contraction ---------------------------------------------------

def test_subforests_of_chain():
    sfs = subforests(CHAIN)
    assert len(sfs) == 2
    assert sorted(s.edge_count for s in sfs) == [0, 1]


def test_subforests_of_cherry():
    sfs = subforests(CHERRY)
    assert len(sfs) == 4
    got = Counter((s.as_forest.encoding, s.contraction.encoding) for s in sfs)
    assert got == Counter(
        {("1", "[[][]]"): 1, ("[[]]", "[[]]"): 2, ("[[][]]", "[]"): 1}
    )


def test_subforests_of_branched_tree_match_expansion():
    # One subforest per edge subset; the term multiset drives the coproduct.
    sfs = subforests(BRANCHED)
    assert len(sfs) == 8
    got = Counter((s.as_forest.encoding, s.contraction.encoding) for s in sfs)
    assert got == Counter(
        {
            ("1", "[[][[]]]"): 1,
            ("[[][[]]]", "[]"): 1,
            ("[[]]", "[[][]]"): 2,
            ("[[]]", "[[[]]]"): 1,
            ("[[[]]]", "[[]]"): 1,
            ("[[][]]", "[[]]"): 1,
            ("[[]] [[]]", "[[]]"): 1,
        }
    )


def test_contract_trivial_and_full():
    trivial = Subforest(BRANCHED, ())
    assert contract(BRANCHED, trivial) == BRANCHED
    full = Subforest.from_edges(BRANCHED, [(0,), (1,), (1, 0)])
    assert contract(BRANCHED, full) == LEAF


def test_contract_middle_fixture():
    # Collapsing the edge to the branching child leaves a cherry.
    s = Subforest(BRANCHED, [[(1,)]])
    assert contract(BRANCHED, s) == CHERRY


def test_subforest_validation():
    with pytest.raises(DomainError):
        Subforest(BRANCHED, [[(0,), (1,)], [(1, 0)]])  # (1,0) touches component 1
    with pytest.raises(DomainError):
        Subforest(BRANCHED, [[(0,), (1, 0)]])  # not connected
    with pytest.raises(DomainError):
        Subforest(BRANCHED, [[]])  # no edge
    with pytest.raises(DomainError):
        Subforest(BRANCHED, [[(2,)]])  # no such edge
    with pytest.raises(DomainError):
        contract(BRANCHED, Subforest(CHAIN, [[(0,)]]))  # wrong host


def test_subforest_grading():
    for n in range(2, 6):
        for t in enumerate_trees(n):
            for s in subforests(t):
                assert s.edge_count + s.contraction.edge_count == t.edge_count
                assert s.contraction.vertex_count == t.vertex_count - s.edge_count


# -- contraction coproduct -----------------------------------------------------------

def tensor_text(comb):
    return dict(comb.terms)


def test_coproduct_of_unit():
    assert tensor_text(coproduct_cem(Forest([LEAF]))) == {"[] (x) []": 1}
    assert tensor_text(coproduct_cem(Forest())) == {"[] (x) []": 1}


def test_coproduct_of_chain():
    assert tensor_text(coproduct_cem(Forest([CHAIN]))) == {
        "[] (x) [[]]": 1,
        "[[]] (x) []": 1,
    }


def test_coproduct_branched_fixture():
    got = tensor_text(coproduct_cem(Forest([BRANCHED])))
    assert got == {
        "[] (x) [[][[]]]": 1,
        "[[][[]]] (x) []": 1,
        "[[]] (x) [[][]]": 2,
        "[[]] (x) [[[]]]": 1,
        "[[[]]] (x) [[]]": 1,
        "[[][]] (x) [[]]": 1,
        "[[]] [[]] (x) [[]]": 1,
    }


def test_coproduct_rejects_mixed_forest():
    with pytest.raises(DomainError):
        coproduct_cem(Forest([LEAF, CHAIN]))
    with pytest.raises(DomainError):
        h_forest_key(Forest([LEAF, CHERRY]))


def test_unit_absorbed_in_h_key():
    assert h_forest_key(Forest([LEAF])) == ()
    assert h_forest_key(Forest([LEAF, LEAF])) == ()
    assert h_forest_key(Forest([CHAIN, CHERRY])) == ("[[]]", "[[][]]")


def test_coproduct_multiplicative():
    got = tensor_text(coproduct_cem(Forest([CHAIN, CHAIN])))
    assert got == {
        "[] (x) [[]] [[]]": 1,
        "[[]] (x) [[]]": 2,
        "[[]] [[]] (x) []": 1,
    }


# -- insertion -------------------------------------------------------------------------

def test_insert_count_fixtures():
    assert insert_count(CHAIN, CHERRY, COROLLA) == 3
    assert insert_count(CHAIN, CHERRY, STALK_CHERRY) == 1
    assert insert_count(CHAIN, LEAF, CHAIN) == 1
    assert insert_count(CHAIN, LEAF, parse_tree("[[[]]]")) == 0
    with pytest.raises(DomainError):
        insert_count(LEAF, CHERRY, COROLLA)


def test_insert_fixtures():
    assert insert(CHAIN, CHERRY) == LinComb(
        KIND_TREE, {"[[][[]]]": 2, "[[[][]]]": 1, "[[][][]]": 3}
    )
    assert insert(CHAIN, CHAIN) == LinComb(KIND_TREE, {"[[[]]]": 2, "[[][]]": 2})
    assert insert(CHAIN, LEAF) == LinComb(KIND_TREE, {"[[]]": 1})


def test_insert_sigma_fixtures():
    assert insert_sigma(CHAIN, CHERRY) == LinComb(
        KIND_TREE, {"[[][[]]]": 4, "[[[][]]]": 1, "[[][][]]": 1}
    )
    assert insert_sigma(CHAIN, LEAF) == LinComb(KIND_TREE, {"[[]]": 1})
    assert insert_sigma(CHAIN, CHAIN) == LinComb(
        KIND_TREE, {"[[[]]]": 2, "[[][]]": 1}
    )


def test_insert_rejects_edgeless_left_operand():
    with pytest.raises(DomainError):
        insert(LEAF, CHAIN)
    with pytest.raises(DomainError):
        insert_sigma(LEAF, CHAIN)
    with pytest.raises(DomainError):
        insert_by_counting(LEAF, CHAIN)


def test_insert_agrees_with_counting_route():
    pool = [t for k in (2, 3, 4) for t in enumerate_trees(k)]
    small = [LEAF] + pool
    for t in pool:
        for u in small:
            if t.edge_count + u.edge_count > 5:
                continue
            assert insert(t, u) == insert_by_counting(t, u)


def test_insert_chain_into_stalk_cherry():
    # Four distinct 5-vertex results with coefficients 2, 2, 3, 1.
    got = insert(CHAIN, STALK_CHERRY)
    assert sorted(got.terms.values()) == [1, 2, 2, 3]
    assert {parse_tree(k).vertex_count for k in got.terms} == {5}
    assert got.terms["[[[][][]]]"] == 3


def test_insert_result_sizes():
    for enc, _ in insert(CHAIN, BRANCHED).sorted_items():
        w = parse_tree(enc)
        assert w.edge_count == CHAIN.edge_count + BRANCHED.edge_count
        assert w.vertex_count == CHAIN.vertex_count + BRANCHED.vertex_count - 1


# -- coaction ---------------------------------------------------------------------------

def test_coaction_fixtures():
    assert tensor_text(coaction(Forest())) == {"[] (x) 1": 1}
    assert tensor_text(coaction(Forest([LEAF]))) == {"[] (x) []": 1}
    assert tensor_text(coaction(Forest([LEAF, LEAF]))) == {"[] (x) [] []": 1}


def test_coaction_matches_coproduct_on_trees():
    # On a tree with edges the coaction is the contraction coproduct, with
    # the right leg read in the vertex-graded algebra.
    got = tensor_text(coaction(Forest([BRANCHED])))
    assert got["[[]] (x) [[][]]"] == 2
    assert got["[] (x) [[][[]]]"] == 1
    assert got["[[][[]]] (x) []"] == 1
    assert len(got) == 7


def test_coaction_mixed_grading():
    for n in range(0, 5):
        from treehopf.trees import enumerate_forests

        for f in enumerate_forests(n, "vertex"):
            for key in coaction(f).terms:
                left, right = key.split(" (x) ")
                s = Forest(
                    [parse_tree(e) for e in left.split()] if left != "[]" else []
                )
                r = (
                    Forest([parse_tree(e) for e in right.split()])
                    if right != "1"
                    else Forest()
                )
                assert s.edge_count + r.vertex_count == n
