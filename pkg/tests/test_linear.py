import random
from fractions import Fraction

import pytest

from treehopf.errors import DomainError
from treehopf.linear import (
    LinComb,
    lincomb_add,
    lincomb_scale,
    lincomb_tensor,
    symmetry_rescale,
    symmetry_rescale_inverse,
)


def comb(*pairs):
    return LinComb("tree", list(pairs))


def random_comb(rng, keys=("[]", "[[]]", "[[][]]", "[[[]]]")):
    return LinComb(
        "tree",
        [(k, Fraction(rng.randint(-6, 6), rng.randint(1, 5))) for k in keys],
    )


def random_rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


# -- basic algebra -------------------------------------------------------------

def test_add_cancels_to_zero():
    assert (comb(("t", 2)) + comb(("t", -2))).is_zero()


def test_add_collects():
    assert comb(("t", 1)) + comb(("t", 1)) == comb(("t", 2))
    a = comb(("[[[]]]", 1), ("[[][]]", 2))
    b = comb(("[[][]]", 1))
    assert a + b == comb(("[[[]]]", 1), ("[[][]]", 3))


def test_scale():
    a = comb(("t", 2), ("u", -3))
    assert a.scale(0).is_zero()
    assert a.scale(1) == a
    assert comb(("t", 2)).scale(Fraction(1, 2)) == comb(("t", 1))


def test_tensor_bilinearity():
    t, u, v = comb(("t", 1)), comb(("u", 1)), comb(("v", 1))
    assert t.tensor(u) == LinComb("tree (x) tree", [("t (x) u", 1)])
    assert (t + u).tensor(v) == t.tensor(v) + u.tensor(v)
    assert t.scale(2).tensor(u.scale(3)) == t.tensor(u).scale(6)


def test_kind_mismatch_rejected():
    with pytest.raises(DomainError):
        comb(("t", 1)) + LinComb("forest", [("t", 1)])


def test_no_explicit_zero_terms():
    a = LinComb("tree", [("t", 1), ("t", -1), ("u", 2)])
    assert list(a.terms) == ["u"]


def test_linearity_randomized():
    rng = random.Random(11)
    for _ in range(50):
        a, b = random_comb(rng), random_comb(rng)
        c = random_rational(rng)
        assert lincomb_add(a, b) == lincomb_add(b, a)
        assert lincomb_scale(c, lincomb_add(a, b)) == lincomb_add(
            lincomb_scale(c, a), lincomb_scale(c, b)
        )
        assert lincomb_tensor(lincomb_scale(c, a), b) == lincomb_tensor(a, b).scale(c)


def test_rational_ring_axioms_sampled():
    rng = random.Random(13)
    for _ in range(100):
        x, y, z = (random_rational(rng) for _ in range(3))
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        if x:
            assert x * (1 / x) == 1


# -- symmetry rescaling -----------------------------------------------------------

def test_symmetry_rescale_fixtures():
    assert symmetry_rescale(comb(("[]", 1))) == comb(("[]", 1))
    assert symmetry_rescale(comb(("[[][]]", 1))) == comb(("[[][]]", 2))
    assert symmetry_rescale(comb(("[[][][]]", 1), ("[[][[]]]", 1))) == comb(
        ("[[][][]]", 6), ("[[][[]]]", 1)
    )


def test_symmetry_rescale_invertible():
    rng = random.Random(17)
    for _ in range(20):
        a = random_comb(rng)
        assert symmetry_rescale_inverse(symmetry_rescale(a)) == a
        assert symmetry_rescale(symmetry_rescale_inverse(a)) == a


def test_symmetry_rescale_requires_tree_basis():
    with pytest.raises(DomainError):
        symmetry_rescale(LinComb("forest", [("[] []", 1)]))


# -- serialization -----------------------------------------------------------------

def test_text_rendering():
    assert comb().to_text() == "0"
    assert comb(("[[]]", 1)).to_text() == "[[]]"
    assert comb(("[[]]", -1), ("[]", 2)).to_text() == "2*[] - [[]]"
    assert comb(("t", Fraction(1, 2))).to_text() == "1/2*t"


def test_json_round_trip():
    a = comb(("[[][]]", Fraction(-3, 2)), ("[]", 5))
    obj = a.to_json_obj()
    assert obj == [
        {"coeff": "5", "term": "[]"},
        {"coeff": "-3/2", "term": "[[][]]"},
    ]
    assert LinComb.from_json_obj("tree", obj) == a


def test_sorted_items_shorter_first():
    a = comb(("[[[]]]", 1), ("[]", 1), ("[[]]", 1))
    assert [k for k, _ in a.sorted_items()] == ["[]", "[[]]", "[[[]]]"]
