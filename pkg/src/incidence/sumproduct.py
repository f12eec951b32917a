"""Sum sets, product sets and the sum-product exponent report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .field import FieldElement

SUM_PRODUCT_EXPONENT = 14 / 11


@dataclass(frozen=True)
class ElementSet:
    """A finite set of field elements in first-seen order.

    Membership is decided by canonical equality; no ordering of the field
    is assumed.
    """

    elements: tuple[FieldElement, ...] = ()

    @classmethod
    def of(cls, items: Iterable[FieldElement]) -> "ElementSet":
        items = tuple(dict.fromkeys(items))
        towers = {e.tower for e in items}
        if len(towers) > 1:
            raise ValueError("elements of one set must share a tower")
        return cls(items)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return e in set(self.elements)

    def encode(self) -> list[str]:
        return [e.encode() for e in self.elements]


def _pairwise(A: ElementSet, op) -> ElementSet:
    elems = A.elements
    out = {}
    for i, a in enumerate(elems):
        for b in elems[i:]:
            out.setdefault(op(a, b), None)
    return ElementSet(tuple(out))


def sumset(A: ElementSet) -> ElementSet:
    return _pairwise(A, lambda a, b: a + b)


def productset(A: ElementSet) -> ElementSet:
    return _pairwise(A, lambda a, b: a * b)


@dataclass(frozen=True)
class ESReport:
    size: int
    size_sum: int
    size_prod: int
    exponent_ratio: float

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "size_sum": self.size_sum,
            "size_prod": self.size_prod,
            "exponent_ratio": self.exponent_ratio,
            "convention": "max(|A+A|, |A*A|) / |A|^(14/11), implied constant taken as 1",
        }


def es_report(A: ElementSet) -> ESReport:
    if len(A) < 2:
        raise ValueError(f"sum-product report needs at least 2 elements, got {len(A)}")
    s, p = len(sumset(A)), len(productset(A))
    return ESReport(len(A), s, p, max(s, p) / len(A) ** SUM_PRODUCT_EXPONENT)
