"""Exact arithmetic in fields finitely generated over Q."""

from ..errors import TowerMismatchError
from .parse import parse_element
from .tower import (
    ALGEBRAIC,
    QQ,
    TRANSCENDENTAL,
    FieldElement,
    GeneratorSpec,
    TowerDescriptor,
    elements,
)

__all__ = [
    "ALGEBRAIC",
    "QQ",
    "TRANSCENDENTAL",
    "FieldElement",
    "GeneratorSpec",
    "TowerDescriptor",
    "arith",
    "elements",
    "format_element",
    "is_zero",
    "parse_element",
]

_OPS = {
    "add": FieldElement.__add__,
    "sub": FieldElement.__sub__,
    "mul": FieldElement.__mul__,
    "div": FieldElement.__truediv__,
}


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.tower != b.tower:
        raise TowerMismatchError(f"cannot combine elements of {a.tower} and {b.tower}")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def is_zero(a: FieldElement) -> bool:
    return a.is_zero()


def format_element(a: FieldElement) -> str:
    return a.encode()
