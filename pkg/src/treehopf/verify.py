"""Exhaustive bounded verification of the algebraic identities.

Every check sweeps all trees (or forests, or dual basis elements) up to a
size bound, evaluates both sides of an identity with exact rational
arithmetic, and reports counterexamples in full. Wherever two independent
code paths exist for the same product, the sweeps compare them, so a bug in
one path cannot silently cancel.

A sweep that matches no cases is reported as inconclusive rather than as a
pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .linear import LinComb, symmetry_rescale, tensor_key
from .trees import (
    Forest,
    RootedTree,
    enumerate_forests,
    enumerate_trees,
    symmetry_factor,
    tree_from_encoding,
)
from .ck_hopf import (
    KIND_TREE,
    bilinear,
    ck_coproduct_table,
    ck_render,
    graft,
    graft_sigma,
)
from .cem_hopf import (
    cem_coproduct_table,
    h_render,
    insert,
    insert_by_counting,
    insert_count,
    insert_sigma,
    phi_table,
)
from .dual import (
    SIDE_CEM,
    SIDE_CK,
    DualElement,
    act,
    convolve_cem,
    convolve_ck,
    h_basis_keys,
    multiset_splits,
    primitive_complement,
    primitive_part,
)

DEFAULT_PRELIE_GRAFT_VERTICES = 8
DEFAULT_PRELIE_INSERT_EDGES = 5
DEFAULT_DERIVATION_T_EDGES = 3
DEFAULT_DERIVATION_UV_VERTICES = 4
DEFAULT_COACTION_VERTICES = 5
DEFAULT_MODULE_ALPHA_EDGES = 3
DEFAULT_MODULE_AB_VERTICES = 3
DEFAULT_LEMMA_EDGES = 4
DEFAULT_STRUCTURE_VERTICES = 6

ROOTED_TREE_COUNTS = (1, 1, 2, 4, 9, 20, 48, 115)


@dataclass
class SweepReport:
    """Outcome of one exhaustive identity sweep."""

    identity: str
    bound: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    @property
    def inconclusive(self) -> bool:
        return self.cases == 0

    @property
    def status(self) -> str:
        if self.inconclusive:
            return "inconclusive"
        return "fail" if self.failures else "pass"

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "bound": self.bound,
            "cases": self.cases,
            "failures": self.failures,
            "millis": self.millis,
        }


class _Sweep:
    """Accumulates cases and counterexamples, then stamps the wall time."""

    def __init__(self, identity: str, bound: dict):
        self.report = SweepReport(identity, bound)
        self._start = time.perf_counter()

    def check(self, inputs: dict, left, right) -> None:
        self.report.cases += 1
        if left != right:
            self.report.failures.append(
                {
                    "inputs": inputs,
                    "left": _json_side(left),
                    "right": _json_side(right),
                }
            )

    def done(self) -> SweepReport:
        self.report.millis = int((time.perf_counter() - self._start) * 1000)
        return self.report


def _json_side(value):
    if isinstance(value, (LinComb, DualElement)):
        return value.to_json_obj()
    return value


def trees_up_to_vertices(n: int) -> list[RootedTree]:
    out: list[RootedTree] = []
    for size in range(1, n + 1):
        out.extend(enumerate_trees(size))
    return out


def trees_up_to_edges(k: int) -> list[RootedTree]:
    """Trees with at least one edge and at most k edges."""
    out: list[RootedTree] = []
    for edges in range(1, k + 1):
        out.extend(enumerate_trees(edges + 1))
    return out


def forests_up_to_vertices(n: int) -> list[Forest]:
    out: list[Forest] = []
    for size in range(n + 1):
        out.extend(enumerate_forests(size, "vertex"))
    return out


def forests_up_to_edges(k: int) -> list[Forest]:
    out: list[Forest] = []
    for size in range(k + 1):
        out.extend(enumerate_forests(size, "edge"))
    return out


# ---------------------------------------------------------------------------
# Pre-Lie sweeps
# ---------------------------------------------------------------------------

_PRODUCTS: dict[str, tuple[Callable, str]] = {
    "graft": (graft, "vertices"),
    "graft-sigma": (graft_sigma, "vertices"),
    "insert": (insert, "edges"),
    "insert-sigma": (insert_sigma, "edges"),
}


def _associator(op, x: RootedTree, y: RootedTree, z: RootedTree) -> LinComb:
    zc = LinComb.single(KIND_TREE, z.encoding)
    return bilinear(op, op(x, y), zc) - bilinear(op, LinComb.single(KIND_TREE, x.encoding), op(y, z))


def check_prelie(product: str, bound: int | None = None) -> SweepReport:
    """Left pre-Lie law: the associator (x, y, z) is symmetric in x and y.

    The bound caps the total size of the triple (vertices for the grafting
    products, edges for the insertion products, whose arguments must all
    have at least one edge).
    """
    if product not in _PRODUCTS:
        raise ValueError(f"unknown product {product!r}; choose from {sorted(_PRODUCTS)}")
    op, measure = _PRODUCTS[product]
    if bound is None:
        bound = (
            DEFAULT_PRELIE_GRAFT_VERTICES
            if measure == "vertices"
            else DEFAULT_PRELIE_INSERT_EDGES
        )
    sweep = _Sweep(f"prelie-{product}", {"total_" + measure: bound})
    if measure == "vertices":
        pool = trees_up_to_vertices(max(bound - 2, 0))
        size = lambda t: t.vertex_count
    else:
        pool = trees_up_to_edges(max(bound - 2, 0))
        size = lambda t: t.edge_count
    for i, x in enumerate(pool):
        for y in pool[i:]:
            rest = bound - size(x) - size(y)
            if rest < 1:
                continue
            for z in pool:
                if size(z) > rest:
                    continue
                sweep.check(
                    {"x": x.encoding, "y": y.encoding, "z": z.encoding},
                    _associator(op, x, y, z),
                    _associator(op, y, x, z),
                )
    return sweep.done()


# ---------------------------------------------------------------------------
# Derivation identity between insertion and grafting
# ---------------------------------------------------------------------------

def check_derivation(
    max_t_edges: int = DEFAULT_DERIVATION_T_EDGES,
    max_uv_vertices: int = DEFAULT_DERIVATION_UV_VERTICES,
) -> SweepReport:
    """Insertion acts as a derivation of grafting:
    insert(t, graft(u, v)) = graft(insert(t, u), v) + graft(u, insert(t, v)),
    together with the same identity for the symmetry-weighted pair.
    """
    sweep = _Sweep(
        "derivation",
        {"max_t_edges": max_t_edges, "max_uv_vertices": max_uv_vertices},
    )
    ts = trees_up_to_edges(max_t_edges)
    uvs = trees_up_to_vertices(max_uv_vertices)
    variants = (
        ("plain", insert, graft),
        ("sigma", insert_sigma, graft_sigma),
    )
    for t in ts:
        for u in uvs:
            for v in uvs:
                for name, ins, gr in variants:
                    tc = LinComb.single(KIND_TREE, t.encoding)
                    uc = LinComb.single(KIND_TREE, u.encoding)
                    vc = LinComb.single(KIND_TREE, v.encoding)
                    left = bilinear(ins, tc, gr(u, v))
                    right = bilinear(gr, ins(t, u), vc) + bilinear(gr, uc, ins(t, v))
                    sweep.check(
                        {
                            "variant": name,
                            "t": t.encoding,
                            "u": u.encoding,
                            "v": v.encoding,
                        },
                        left,
                        right,
                    )
    return sweep.done()


# ---------------------------------------------------------------------------
# Coaction compatibility
# ---------------------------------------------------------------------------

_KIND_TRIPLE = "h-forest (x) ck-forest (x) ck-forest"


def _coaction_left(fkey) -> LinComb:
    terms: dict[str, Fraction] = {}
    for (s, r), c in phi_table(fkey).items():
        for (r1, r2), c2 in ck_coproduct_table(r).items():
            key = tensor_key(h_render(s), tensor_key(ck_render(r1), ck_render(r2)))
            terms[key] = terms.get(key, Fraction(0)) + c * c2
    return LinComb(_KIND_TRIPLE, terms)


def _coaction_right(fkey) -> LinComb:
    from .ck_hopf import merge_keys

    terms: dict[str, Fraction] = {}
    for (f1, f2), c in ck_coproduct_table(fkey).items():
        for (s1, r1), c1 in phi_table(f1).items():
            for (s2, r2), c2 in phi_table(f2).items():
                key = tensor_key(
                    h_render(merge_keys(s1, s2)),
                    tensor_key(ck_render(r1), ck_render(r2)),
                )
                terms[key] = terms.get(key, Fraction(0)) + c * c1 * c2
    return LinComb(_KIND_TRIPLE, terms)


def check_coaction(max_vertices: int = DEFAULT_COACTION_VERTICES) -> SweepReport:
    """The coaction and the cut coproduct commute: applying the cut coproduct
    inside the coaction equals coacting on both cut factors and multiplying
    the edge-graded legs."""
    sweep = _Sweep("coaction", {"max_vertices": max_vertices})
    for f in forests_up_to_vertices(max_vertices):
        sweep.check(
            {"forest": f.encoding},
            _coaction_left(f.key),
            _coaction_right(f.key),
        )
    return sweep.done()


# ---------------------------------------------------------------------------
# Module compatibility of the two convolutions
# ---------------------------------------------------------------------------

def check_module_hopf(
    max_alpha_edges: int = DEFAULT_MODULE_ALPHA_EDGES,
    max_ab_vertices: int = DEFAULT_MODULE_AB_VERTICES,
) -> SweepReport:
    """Module compatibility: splitting alpha through the dual coproduct and
    acting factorwise multiplies to alpha acting on the convolution:
    sum (alpha1 . a) * (alpha2 . b) = alpha . (a * b).

    Swept over single-tree and two-tree-forest duals alpha, with the
    derivation corollary checked separately for the single-tree ones.
    """
    sweep = _Sweep(
        "module-hopf",
        {"max_alpha_edges": max_alpha_edges, "max_ab_vertices": max_ab_vertices},
    )
    alpha_keys = []
    for degree in range(1, max_alpha_edges + 1):
        for fkey in h_basis_keys(degree):
            if len(fkey) in (1, 2):
                alpha_keys.append(fkey)
    ab = [Forest([u]) for u in trees_up_to_vertices(max_ab_vertices)]
    for akey in alpha_keys:
        for fa in ab:
            for fb in ab:
                a = DualElement.delta_basis(fa)
                b = DualElement.delta_basis(fb)
                left = DualElement(SIDE_CK)
                for g, h in multiset_splits(akey):
                    left = left + convolve_ck(
                        act(DualElement(SIDE_CEM, {g: 1}), a),
                        act(DualElement(SIDE_CEM, {h: 1}), b),
                    )
                alpha = DualElement(SIDE_CEM, {akey: 1})
                right = act(alpha, convolve_ck(a, b))
                sweep.check(
                    {"alpha": "Z:" + h_render(akey), "a": fa.encoding, "b": fb.encoding},
                    left,
                    right,
                )
                if len(akey) == 1:
                    corollary = convolve_ck(act(alpha, a), b) + convolve_ck(
                        a, act(alpha, b)
                    )
                    sweep.check(
                        {
                            "alpha": "Z:" + h_render(akey),
                            "a": fa.encoding,
                            "b": fb.encoding,
                            "variant": "derivation-corollary",
                        },
                        right,
                        corollary,
                    )
    return sweep.done()


# ---------------------------------------------------------------------------
# Lemma sweeps
# ---------------------------------------------------------------------------

def check_lemmas(max_edges: int = DEFAULT_LEMMA_EDGES) -> list[SweepReport]:
    """Each supporting lemma swept independently; one report per lemma."""
    reports = []

    sweep = _Sweep("complement-symmetric", {"total_edges": max_edges + 1})
    for t in trees_up_to_edges(max_edges):
        for u in trees_up_to_edges(max_edges + 1 - t.edge_count):
            zt = DualElement.z_basis(Forest([t]))
            zu = DualElement.z_basis(Forest([u]))
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                primitive_complement(convolve_cem(zt, zu)),
                primitive_complement(convolve_cem(zu, zt)),
            )
    reports.append(sweep.done())

    sweep = _Sweep("insertion-via-projection", {"total_edges": max_edges})
    for t in trees_up_to_edges(max_edges - 1):
        for u in trees_up_to_edges(max_edges - t.edge_count):
            zt = DualElement.z_basis(Forest([t]))
            zu = DualElement.z_basis(Forest([u]))
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                primitive_part(convolve_cem(zt, zu)),
                DualElement.from_tree_comb(SIDE_CEM, insert(t, u)),
            )
    reports.append(sweep.done())

    sweep = _Sweep(
        "projection-through-action",
        {"max_t_edges": DEFAULT_DERIVATION_T_EDGES, "max_f_vertices": 4},
    )
    for t in trees_up_to_edges(DEFAULT_DERIVATION_T_EDGES):
        zt = DualElement.z_basis(Forest([t]))
        for f in forests_up_to_vertices(4):
            if f.is_empty():
                continue
            df = DualElement.delta_basis(f)
            sweep.check(
                {"t": t.encoding, "f": f.encoding},
                primitive_part(act(zt, df)),
                primitive_part(act(zt, primitive_part(df))),
            )
    reports.append(sweep.done())

    sweep = _Sweep(
        "action-is-insertion",
        {"max_t_edges": DEFAULT_DERIVATION_T_EDGES, "max_u_vertices": 4},
    )
    for t in trees_up_to_edges(DEFAULT_DERIVATION_T_EDGES):
        zt = DualElement.z_basis(Forest([t]))
        for u in trees_up_to_vertices(4):
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                act(zt, DualElement.delta_basis(Forest([u]))),
                DualElement.from_tree_comb(SIDE_CK, insert(t, u)),
            )
    reports.append(sweep.done())

    sweep = _Sweep("symmetry-intertwiner-graft", {"total_vertices": 7})
    for t in trees_up_to_vertices(6):
        for u in trees_up_to_vertices(7 - t.vertex_count):
            scale = symmetry_factor(t) * symmetry_factor(u)
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                symmetry_rescale(graft_sigma(t, u)),
                graft(t, u).scale(scale),
            )
    reports.append(sweep.done())

    sweep = _Sweep("symmetry-intertwiner-insert", {"total_edges": max_edges})
    for t in trees_up_to_edges(max_edges - 1):
        for u in trees_up_to_edges(max_edges - t.edge_count):
            scale = symmetry_factor(t) * symmetry_factor(u)
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                symmetry_rescale(insert_sigma(t, u)),
                insert(t, u).scale(scale),
            )
    reports.append(sweep.done())

    sweep = _Sweep("bracket-graft", {"total_vertices": 7})
    for t in trees_up_to_vertices(6):
        for u in trees_up_to_vertices(7 - t.vertex_count):
            dt = DualElement.delta_basis(Forest([t]))
            du = DualElement.delta_basis(Forest([u]))
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                convolve_ck(dt, du) - convolve_ck(du, dt),
                DualElement.from_tree_comb(SIDE_CK, graft(t, u) - graft(u, t)),
            )
    reports.append(sweep.done())

    sweep = _Sweep("bracket-insert", {"total_edges": max_edges})
    for t in trees_up_to_edges(max_edges - 1):
        for u in trees_up_to_edges(max_edges - t.edge_count):
            zt = DualElement.z_basis(Forest([t]))
            zu = DualElement.z_basis(Forest([u]))
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                convolve_cem(zt, zu) - convolve_cem(zu, zt),
                DualElement.from_tree_comb(SIDE_CEM, insert(t, u) - insert(u, t)),
            )
    reports.append(sweep.done())

    sweep = _Sweep("neutral-elements", {"max_edges": max_edges, "max_vertices": 5})
    z_unit = DualElement.z_unit()
    counit = DualElement.counit_ck()
    for f in forests_up_to_edges(max_edges):
        alpha = DualElement.z_basis(f)
        name = "Z:" + h_render(next(iter(alpha.terms)))
        sweep.check({"alpha": name}, convolve_cem(z_unit, alpha), alpha)
        sweep.check({"alpha": name, "side": "right"}, convolve_cem(alpha, z_unit), alpha)
    for f in forests_up_to_vertices(5):
        a = DualElement.delta_basis(f)
        sweep.check({"a": "d:" + ck_render(f.key)}, act(z_unit, a), a)
        sweep.check(
            {"a": "d:" + ck_render(f.key), "side": "counit-left"},
            convolve_ck(counit, a),
            a,
        )
        sweep.check(
            {"a": "d:" + ck_render(f.key), "side": "counit-right"},
            convolve_ck(a, counit),
            a,
        )
    reports.append(sweep.done())

    return reports


# ---------------------------------------------------------------------------
# Structural invariants
# ---------------------------------------------------------------------------

def _coassoc_report(
    name: str,
    forests: Iterable[Forest],
    table,
    keys_of: Callable[[Forest], tuple],
    bound: dict,
) -> SweepReport:
    sweep = _Sweep(name, bound)
    for f in forests:
        fkey = keys_of(f)
        left: dict = {}
        right: dict = {}
        for (l, r), c in table(fkey).items():
            for (l1, l2), c2 in table(l).items():
                key = (l1, l2, r)
                left[key] = left.get(key, 0) + c * c2
            for (r1, r2), c2 in table(r).items():
                key = (l, r1, r2)
                right[key] = right.get(key, 0) + c * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        sweep.check({"forest": f.encoding}, left == right, True)
    return sweep.done()


def check_structure(max_vertices: int = DEFAULT_STRUCTURE_VERTICES) -> list[SweepReport]:
    """Coassociativity, counit, grading splits, integrality of the weighted
    products against their unweighted counterparts, cross-route agreement,
    and the rooted-tree census."""
    reports = []

    reports.append(
        _coassoc_report(
            "coassociativity-ck",
            forests_up_to_vertices(max_vertices),
            ck_coproduct_table,
            lambda f: f.key,
            {"max_vertices": max_vertices},
        )
    )
    reports.append(
        _coassoc_report(
            "coassociativity-cem",
            forests_up_to_edges(DEFAULT_LEMMA_EDGES),
            cem_coproduct_table,
            lambda f: f.key,
            {"max_edges": DEFAULT_LEMMA_EDGES},
        )
    )

    sweep = _Sweep("counit", {"max_vertices": 5, "max_edges": 4})
    for f in forests_up_to_vertices(5):
        table = ck_coproduct_table(f.key)
        left = {r: c for (l, r), c in table.items() if l == ()}
        right = {l: c for (l, r), c in table.items() if r == ()}
        sweep.check({"forest": f.encoding, "coproduct": "ck"}, left, {f.key: 1})
        sweep.check({"forest": f.encoding, "coproduct": "ck", "side": "right"}, right, {f.key: 1})
    for f in forests_up_to_edges(4):
        table = cem_coproduct_table(f.key)
        left = {r: c for (l, r), c in table.items() if l == ()}
        right = {l: c for (l, r), c in table.items() if r == ()}
        sweep.check({"forest": f.encoding, "coproduct": "cem"}, left, {f.key: 1})
        sweep.check({"forest": f.encoding, "coproduct": "cem", "side": "right"}, right, {f.key: 1})
    reports.append(sweep.done())

    from .dual import _key_edges, _key_vertices

    sweep = _Sweep("grading", {"max_vertices": max_vertices, "max_edges": 4})
    for f in forests_up_to_vertices(max_vertices):
        ok = all(
            _key_vertices(l) + _key_vertices(r) == f.vertex_count
            for (l, r) in ck_coproduct_table(f.key)
        )
        sweep.check({"forest": f.encoding, "grading": "vertices-under-cut"}, ok, True)
        ok = all(
            _key_edges(s) + _key_vertices(r) == f.vertex_count
            for (s, r) in phi_table(f.key)
        )
        sweep.check({"forest": f.encoding, "grading": "mixed-under-coaction"}, ok, True)
    for f in forests_up_to_edges(4):
        ok = all(
            _key_edges(l) + _key_edges(r) == f.edge_count
            for (l, r) in cem_coproduct_table(f.key)
        )
        sweep.check({"forest": f.encoding, "grading": "edges-under-contraction"}, ok, True)
    reports.append(sweep.done())

    sweep = _Sweep(
        "graft-routes-agree", {"total_vertices": DEFAULT_PRELIE_GRAFT_VERTICES}
    )
    for t in trees_up_to_vertices(DEFAULT_PRELIE_GRAFT_VERTICES - 1):
        for u in trees_up_to_vertices(DEFAULT_PRELIE_GRAFT_VERTICES - t.vertex_count):
            st, su = symmetry_factor(t), symmetry_factor(u)
            sigma_route = graft_sigma(t, u)
            count_route = LinComb(
                KIND_TREE,
                [
                    (enc, Fraction(c * st * su, symmetry_factor(tree_from_encoding(enc))))
                    for enc, c in graft(t, u).terms.items()
                ],
            )
            integral = all(
                c.denominator == 1 and c >= 0 for c in count_route.terms.values()
            )
            total = sum(sigma_route.terms.values())
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                (sigma_route, integral, total),
                (count_route, True, u.vertex_count),
            )
    reports.append(sweep.done())

    sweep = _Sweep(
        "insert-routes-agree", {"total_edges": DEFAULT_PRELIE_INSERT_EDGES}
    )
    for t in trees_up_to_edges(DEFAULT_PRELIE_INSERT_EDGES - 1):
        for u in trees_up_to_edges(DEFAULT_PRELIE_INSERT_EDGES - t.edge_count):
            st, su = symmetry_factor(t), symmetry_factor(u)
            fast = insert(t, u)
            counted = insert_by_counting(t, u)
            sigma_from_count = LinComb(
                KIND_TREE,
                [
                    (enc, Fraction(c * st * su, symmetry_factor(tree_from_encoding(enc))))
                    for enc, c in counted.terms.items()
                ],
            )
            integral = all(
                c.denominator == 1 and c > 0 for c in sigma_from_count.terms.values()
            )
            sweep.check(
                {"t": t.encoding, "u": u.encoding},
                (fast, insert_sigma(t, u), integral),
                (counted, sigma_from_count, True),
            )
    reports.append(sweep.done())

    sweep = _Sweep("insert-count-vs-coaction", {"max_host_vertices": 6})
    for w in trees_up_to_vertices(6):
        table = phi_table((w.encoding,))
        for (s, r), c in table.items():
            if len(s) != 1:
                continue
            t = tree_from_encoding(s[0])
            u = tree_from_encoding(r[0])
            sweep.check(
                {"t": s[0], "u": r[0], "w": w.encoding},
                insert_count(t, u, w),
                c,
            )
    reports.append(sweep.done())

    sweep = _Sweep("rooted-tree-census", {"max_vertices": len(ROOTED_TREE_COUNTS)})
    for n, expected in enumerate(ROOTED_TREE_COUNTS, start=1):
        sweep.check({"vertices": n}, len(enumerate_trees(n)), expected)
    reports.append(sweep.done())

    return reports


# ---------------------------------------------------------------------------
# Suite registry
# ---------------------------------------------------------------------------

SUITES = (
    "structure",
    "prelie-graft",
    "prelie-graft-sigma",
    "prelie-insert",
    "prelie-insert-sigma",
    "derivation",
    "coaction",
    "lemmas",
    "module-hopf",
)


def run_suite(
    name: str,
    bound: int | None = None,
    max_t_edges: int | None = None,
    max_uv_vertices: int | None = None,
) -> list[SweepReport]:
    """Run one named suite (or 'all') and return its reports."""
    if name == "all":
        reports = []
        for suite in SUITES:
            reports.extend(run_suite(suite, bound, max_t_edges, max_uv_vertices))
        return reports
    if name.startswith("prelie-"):
        return [check_prelie(name.removeprefix("prelie-"), bound)]
    if name == "derivation":
        return [
            check_derivation(
                max_t_edges or DEFAULT_DERIVATION_T_EDGES,
                max_uv_vertices or DEFAULT_DERIVATION_UV_VERTICES,
            )
        ]
    if name == "coaction":
        return [check_coaction(bound or DEFAULT_COACTION_VERTICES)]
    if name == "lemmas":
        return check_lemmas(bound or DEFAULT_LEMMA_EDGES)
    if name == "module-hopf":
        return [
            check_module_hopf(
                bound or DEFAULT_MODULE_ALPHA_EDGES, DEFAULT_MODULE_AB_VERTICES
            )
        ]
    if name == "structure":
        return check_structure(bound or DEFAULT_STRUCTURE_VERTICES)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
