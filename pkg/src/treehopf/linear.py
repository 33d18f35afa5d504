"""Exact formal linear combinations over canonical string bases.

Coefficients are fractions.Fraction throughout; there is no floating point
anywhere in the package. Basis keys are canonical encodings (of a tree, a
forest, or a tensor of those), so one total order covers every basis and
output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError
from .trees import parse_tree, sort_key, symmetry_factor

Rational = Fraction

TENSOR_SEP = " (x) "


def tensor_key(left: str, right: str) -> str:
    return left + TENSOR_SEP + right


class LinComb:
    """A finite formal sum of basis elements with nonzero rational coefficients.

    ``kind`` labels the basis ("tree", "ck-forest", ...); combining two
    combinations of different kinds is a domain error, not a silent mix-up.
    """

    __slots__ = ("kind", "terms")

    def __init__(
        self,
        kind: str,
        terms: Mapping[str, Fraction | int] | Iterable[tuple[str, Fraction | int]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[str, Fraction] = {}
        for key, coeff in items:
            c = collected.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                collected[key] = c
            else:
                collected.pop(key, None)
        self.kind = kind
        self.terms = collected

    @classmethod
    def single(cls, kind: str, key: str, coeff: Fraction | int = 1) -> "LinComb":
        return cls(kind, [(key, coeff)])

    @classmethod
    def zero(cls, kind: str) -> "LinComb":
        return cls(kind)

    def _require_same_kind(self, other: "LinComb") -> None:
        if self.kind != other.kind:
            raise DomainError(
                f"cannot combine bases of kind {self.kind!r} and {other.kind!r}"
            )

    def __add__(self, other: "LinComb") -> "LinComb":
        self._require_same_kind(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            c = out.get(key, Fraction(0)) + coeff
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        result = LinComb.zero(self.kind)
        result.terms = out
        return result

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def scale(self, coeff: Fraction | int) -> "LinComb":
        c = Fraction(coeff)
        if not c:
            return LinComb.zero(self.kind)
        result = LinComb.zero(self.kind)
        result.terms = {key: c * v for key, v in self.terms.items()}
        return result

    def tensor(self, other: "LinComb") -> "LinComb":
        kind = f"{self.kind} (x) {other.kind}"
        out: dict[str, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tensor_key(ka, kb)
                c = out.get(key, Fraction(0)) + ca * cb
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        result = LinComb.zero(kind)
        result.terms = out
        return result

    def coefficient(self, key: str) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_items(self) -> list[tuple[str, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(self.sorted_items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinComb)
            and self.kind == other.kind
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.kind, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"LinComb({self.kind!r}, {self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for key, coeff in self.sorted_items():
            mag = -coeff if coeff < 0 else coeff
            body = key if mag == 1 else f"{mag}*{key}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> list[dict[str, str]]:
        return [
            {"coeff": str(coeff), "term": key} for key, coeff in self.sorted_items()
        ]

    @classmethod
    def from_json_obj(cls, kind: str, obj: Iterable[Mapping[str, str]]) -> "LinComb":
        return cls(kind, [(entry["term"], Fraction(entry["coeff"])) for entry in obj])


def lincomb_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b


def lincomb_scale(coeff: Fraction | int, a: LinComb) -> LinComb:
    return a.scale(coeff)


def lincomb_tensor(a: LinComb, b: LinComb) -> LinComb:
    return a.tensor(b)


def symmetry_rescale(a: LinComb) -> LinComb:
    """Rescale every basis tree by its automorphism count (linearly extended).

    Invertible on any finite combination since automorphism counts are
    positive; the inverse divides instead.
    """
    if a.kind != "tree":
        raise DomainError(f"symmetry rescale needs a tree basis, got {a.kind!r}")
    return LinComb(
        "tree",
        [(key, coeff * symmetry_factor(parse_tree(key))) for key, coeff in a.terms.items()],
    )


def symmetry_rescale_inverse(a: LinComb) -> LinComb:
    if a.kind != "tree":
        raise DomainError(f"symmetry rescale needs a tree basis, got {a.kind!r}")
    return LinComb(
        "tree",
        [(key, coeff / symmetry_factor(parse_tree(key))) for key, coeff in a.terms.items()],
    )
