"""Graded duals of the two forest algebras, convolutions, and projections.

Every basis forest f of a graded algebra has a dual functional picking out
the coefficient of f. Each coproduct induces a convolution on its dual, the
coaction induces an action of the edge-graded dual on the vertex-graded one,
and because the algebras are graded with finite-dimensional pieces, all of
these are computed exactly by pairing against the full monomial basis of the
output degree. No truncation parameter exists: results are finite sums.

Sides are tagged: "cem" for duals of the edge-graded algebra (functionals
written Z:...), "ck" for duals of the vertex-graded one (written d:...).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import DomainError
from .linear import LinComb, tensor_key
from .trees import Forest, enumerate_forests, sort_key, tree_from_encoding
from .ck_hopf import ForestKey, ck_coproduct_table, ck_render
from .cem_hopf import cem_coproduct_table, h_forest_key, h_render, phi_table

SIDE_CEM = "cem"
SIDE_CK = "ck"

KIND_DUAL_TENSOR = "cem-dual (x) cem-dual"


@lru_cache(maxsize=None)
def _key_edges(key: ForestKey) -> int:
    return sum(tree_from_encoding(enc).edge_count for enc in key)


@lru_cache(maxsize=None)
def _key_vertices(key: ForestKey) -> int:
    return sum(tree_from_encoding(enc).vertex_count for enc in key)


@lru_cache(maxsize=None)
def h_basis_keys(edge_degree: int) -> tuple[ForestKey, ...]:
    return tuple(f.key for f in enumerate_forests(edge_degree, "edge"))


@lru_cache(maxsize=None)
def ck_basis_keys(vertex_degree: int) -> tuple[ForestKey, ...]:
    return tuple(f.key for f in enumerate_forests(vertex_degree, "vertex"))


def _render(side: str, key: ForestKey) -> str:
    return ("Z:" + h_render(key)) if side == SIDE_CEM else ("d:" + ck_render(key))


class DualElement:
    """A finite rational combination of dual basis functionals."""

    __slots__ = ("side", "terms")

    def __init__(
        self,
        side: str,
        terms: Mapping[ForestKey, Fraction | int]
        | Iterable[tuple[ForestKey, Fraction | int]] = (),
    ):
        if side not in (SIDE_CEM, SIDE_CK):
            raise DomainError(f"unknown dual side {side!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[ForestKey, Fraction] = {}
        for key, coeff in items:
            c = collected.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                collected[key] = c
            else:
                collected.pop(key, None)
        self.side = side
        self.terms = collected

    # -- constructors -------------------------------------------------------

    @classmethod
    def z_basis(cls, forest: Forest) -> "DualElement":
        """Dual of a monomial of the edge-graded algebra."""
        return cls(SIDE_CEM, {h_forest_key(forest): Fraction(1)})

    @classmethod
    def delta_basis(cls, forest: Forest) -> "DualElement":
        """Dual of a monomial of the vertex-graded algebra."""
        return cls(SIDE_CK, {forest.key: Fraction(1)})

    @classmethod
    def z_unit(cls) -> "DualElement":
        """Dual of the unit of the edge-graded algebra; neutral for its
        convolution and for the module action."""
        return cls(SIDE_CEM, {(): Fraction(1)})

    @classmethod
    def counit_ck(cls) -> "DualElement":
        """Dual of the empty forest; neutral for the vertex-graded convolution."""
        return cls(SIDE_CK, {(): Fraction(1)})

    @classmethod
    def from_tree_comb(cls, side: str, comb: LinComb) -> "DualElement":
        """Linear extension of tree -> dual-of-tree."""
        if comb.kind != "tree":
            raise DomainError(f"expected a tree combination, got {comb.kind!r}")
        return cls(side, [((enc,), coeff) for enc, coeff in comb.terms.items()])

    # -- vector operations ---------------------------------------------------

    def _require_side(self, other: "DualElement") -> None:
        if self.side != other.side:
            raise DomainError(
                f"cannot combine dual elements of sides {self.side!r} and {other.side!r}"
            )

    def __add__(self, other: "DualElement") -> "DualElement":
        self._require_side(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            c = out.get(key, Fraction(0)) + coeff
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        result = DualElement(self.side)
        result.terms = out
        return result

    def __sub__(self, other: "DualElement") -> "DualElement":
        return self + other.scale(-1)

    def scale(self, coeff: Fraction | int) -> "DualElement":
        c = Fraction(coeff)
        if not c:
            return DualElement(self.side)
        result = DualElement(self.side)
        result.terms = {key: c * v for key, v in self.terms.items()}
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DualElement)
            and self.side == other.side
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.side, frozenset(self.terms.items())))

    def sorted_items(self) -> list[tuple[ForestKey, Fraction]]:
        return sorted(
            self.terms.items(), key=lambda kv: tuple(sort_key(e) for e in kv[0])
        )

    def __iter__(self) -> Iterator[tuple[ForestKey, Fraction]]:
        return iter(self.sorted_items())

    def __repr__(self) -> str:
        return f"DualElement({self.side!r}, {self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_items():
            name = _render(self.side, key)
            mag = -coeff if coeff < 0 else coeff
            body = name if mag == 1 else f"{mag}*{name}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> list[dict[str, str]]:
        return [
            {"coeff": str(coeff), "term": _render(self.side, key)}
            for key, coeff in self.sorted_items()
        ]


def pair(functional: DualElement, forest: Forest) -> Fraction:
    """Evaluate a dual element on a basis forest of the matching algebra."""
    if functional.side == SIDE_CEM:
        key = h_forest_key(forest)
    else:
        key = forest.key
    return functional.terms.get(key, Fraction(0))


# ---------------------------------------------------------------------------
# Convolutions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _convolve_cem_pair(ka: ForestKey, kb: ForestKey) -> tuple[tuple[ForestKey, int], ...]:
    degree = _key_edges(ka) + _key_edges(kb)
    out = []
    for fkey in h_basis_keys(degree):
        c = cem_coproduct_table(fkey).get((ka, kb), 0)
        if c:
            out.append((fkey, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _convolve_ck_pair(ka: ForestKey, kb: ForestKey) -> tuple[tuple[ForestKey, int], ...]:
    degree = _key_vertices(ka) + _key_vertices(kb)
    out = []
    for fkey in ck_basis_keys(degree):
        c = ck_coproduct_table(fkey).get((ka, kb), 0)
        if c:
            out.append((fkey, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _act_pair(ka: ForestKey, kb: ForestKey) -> tuple[tuple[ForestKey, int], ...]:
    degree = _key_edges(ka) + _key_vertices(kb)
    out = []
    for fkey in ck_basis_keys(degree):
        c = phi_table(fkey).get((ka, kb), 0)
        if c:
            out.append((fkey, c))
    return tuple(out)


def _convolve(a: DualElement, b: DualElement, pair_table, out_side: str) -> DualElement:
    out: dict[ForestKey, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            weight = ca * cb
            for fkey, c in pair_table(ka, kb):
                v = out.get(fkey, Fraction(0)) + weight * c
                if v:
                    out[fkey] = v
                else:
                    out.pop(fkey, None)
    result = DualElement(out_side)
    result.terms = out
    return result


def convolve_cem(a: DualElement, b: DualElement) -> DualElement:
    """Convolution on the edge-graded dual, determined degreewise by pairing
    the tensor square against the contraction coproduct."""
    if a.side != SIDE_CEM or b.side != SIDE_CEM:
        raise DomainError("convolve_cem needs two edge-graded dual elements")
    return _convolve(a, b, _convolve_cem_pair, SIDE_CEM)


def convolve_ck(a: DualElement, b: DualElement) -> DualElement:
    """Convolution on the vertex-graded dual, via the cut coproduct."""
    if a.side != SIDE_CK or b.side != SIDE_CK:
        raise DomainError("convolve_ck needs two vertex-graded dual elements")
    return _convolve(a, b, _convolve_ck_pair, SIDE_CK)


def act(alpha: DualElement, a: DualElement) -> DualElement:
    """Action of the edge-graded dual on the vertex-graded dual, determined
    by pairing against the coaction. The dual of the unit acts as identity."""
    if alpha.side != SIDE_CEM or a.side != SIDE_CK:
        raise DomainError("act needs an edge-graded dual acting on a vertex-graded dual")
    return _convolve(alpha, a, _act_pair, SIDE_CK)


# ---------------------------------------------------------------------------
# Dual coproduct (dual to the forest product) and projections
# ---------------------------------------------------------------------------

def multiset_splits(key: ForestKey) -> list[tuple[ForestKey, ForestKey]]:
    """All ordered two-part splits of a forest monomial, each with
    multiplicity one."""
    groups = [(enc, len(list(g))) for enc, g in itertools.groupby(key)]
    splits: list[tuple[ForestKey, ForestKey]] = []
    for counts in itertools.product(*[range(m + 1) for _, m in groups]):
        left: tuple[str, ...] = ()
        right: tuple[str, ...] = ()
        for (enc, m), k in zip(groups, counts):
            left += (enc,) * k
            right += (enc,) * (m - k)
        splits.append((left, right))
    return splits


def dual_coproduct(alpha: DualElement) -> LinComb:
    """Coproduct on the edge-graded dual, dual to the forest product: the
    dual of f splits into duals of g (x) h over all g, h with g.h = f."""
    if alpha.side != SIDE_CEM:
        raise DomainError("dual_coproduct is defined on the edge-graded dual")
    terms = []
    for key, coeff in alpha.terms.items():
        for left, right in multiset_splits(key):
            terms.append(
                (tensor_key(_render(SIDE_CEM, left), _render(SIDE_CEM, right)), coeff)
            )
    return LinComb(KIND_DUAL_TENSOR, terms)


def primitive_part(x: DualElement) -> DualElement:
    """Projection onto the span of single-tree duals, annihilating the
    degree-zero dual and every multi-tree forest dual."""
    return DualElement(
        x.side, [(key, c) for key, c in x.terms.items() if len(key) == 1]
    )


def primitive_complement(x: DualElement) -> DualElement:
    """Identity minus the primitive projection."""
    return DualElement(
        x.side, [(key, c) for key, c in x.terms.items() if len(key) != 1]
    )
