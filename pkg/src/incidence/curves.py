"""Point-curve incidences and the degrees-of-freedom hypothesis."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import GeometryError, GuardExceededError, TowerMismatchError
from .field import QQ, FieldElement, TowerDescriptor
from .geometry import Line, Point

DOF_GUARD = 10**7

_FACTOR = re.compile(r"^([xy])(?:\^(\d+))?$")


def _monomial_key(ij: tuple[int, int]) -> tuple[int, int]:
    # total degree descending, then x-degree descending: x before y before 1
    i, j = ij
    return (-(i + j), -i)


def parse_monomial(key: str) -> tuple[int, int]:
    """``"x^2*y"`` -> ``(2, 1)``; ``"1"`` is the constant monomial."""
    exps = {"x": 0, "y": 0}
    for factor in key.replace(" ", "").split("*"):
        if factor == "1":
            continue
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"bad monomial {key!r}")
        exps[m.group(1)] += int(m.group(2) or 1)
    return (exps["x"], exps["y"])


def format_monomial(ij: tuple[int, int]) -> str:
    i, j = ij
    return f"x^{i}*y^{j}"


@dataclass(frozen=True)
class Curve:
    """A nonzero polynomial in ``x, y``, scaled so its leading coefficient is 1.

    Terms are ordered by total degree, then by the power of ``x``; for a
    degree-one polynomial this is exactly the line convention (first nonzero
    of ``a, b`` equals 1).
    """

    tower: TowerDescriptor
    terms: tuple[tuple[tuple[int, int], FieldElement], ...]

    @classmethod
    def from_coefficients(cls, coeffs: Mapping, tower: TowerDescriptor = QQ) -> "Curve":
        items = {}
        for k, v in coeffs.items():
            ij = parse_monomial(k) if isinstance(k, str) else tuple(k)
            c = tower.element(v)
            if c.tower != tower:
                raise TowerMismatchError(f"coefficient {c} is not over {tower}")
            items[ij] = items.get(ij, tower.zero()) + c
        items = {k: v for k, v in items.items() if not v.is_zero()}
        if not items:
            raise GeometryError("the zero polynomial is not a curve")
        ordered = sorted(items.items(), key=lambda kv: _monomial_key(kv[0]))
        lead_inv = ordered[0][1].inverse()
        return cls(tower, tuple((ij, c * lead_inv) for ij, c in ordered))

    @classmethod
    def from_line(cls, l: Line) -> "Curve":
        return cls.from_coefficients({(1, 0): l.a, (0, 1): l.b, (0, 0): l.c}, l.tower)

    @property
    def degree(self) -> int:
        return max(i + j for (i, j), _ in self.terms)

    def evaluate(self, x: FieldElement, y: FieldElement) -> FieldElement:
        xp, yp = [self.tower.one()], [self.tower.one()]
        acc = self.tower.zero()
        for (i, j), c in self.terms:
            while len(xp) <= i:
                xp.append(xp[-1] * x)
            while len(yp) <= j:
                yp.append(yp[-1] * y)
            acc = acc + c * xp[i] * yp[j]
        return acc

    def to_dict(self) -> dict[str, str]:
        return {format_monomial(ij): c.encode() for ij, c in self.terms}

    def __str__(self) -> str:
        return " + ".join(f"({c})*{format_monomial(ij)}" for ij, c in self.terms)


def on_curve(p: Point, c: Curve) -> bool:
    if p.tower != c.tower:
        raise TowerMismatchError(f"point over {p.tower} tested against curve over {c.tower}")
    return c.evaluate(p.x, p.y).is_zero()


def count_curve_incidences(points: Sequence[Point], curves: Sequence[Curve]) -> int:
    return sum(1 for c in curves for p in points if on_curve(p, c))


def curve_bound_ratio(incidences: int, m: int, n: int, k: int, eps: float) -> float:
    """``I / (m^(k/(2k-1)+eps) n^((2k-2)/(2k-1)) + m + n)``."""
    bound = m ** (k / (2 * k - 1) + eps) * n ** ((2 * k - 2) / (2 * k - 1)) + m + n
    return incidences / bound if bound else 0.0


@dataclass(frozen=True)
class Violation:
    kind: str  # "subset": k points on more than s curves; "pair": two curves sharing more than s points
    points: tuple[int, ...]
    curves: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "points": list(self.points), "curves": list(self.curves)}


def _masks(points, curves) -> list[int]:
    out = []
    for c in curves:
        mask = 0
        for i, p in enumerate(points):
            if on_curve(p, c):
                mask |= 1 << i
        out.append(mask)
    return out


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def dof_check(points: Sequence[Point], curves: Sequence[Curve], k: int, s: int) -> list[Violation]:
    """Every witness against ``k`` degrees of freedom with multiplicity type ``s``.

    Condition 1: no ``k`` points lie on more than ``s`` curves together.
    Condition 2: no two distinct curves share more than ``s`` of the points.
    An empty result means the hypothesis holds.
    """
    if k < 1 or s < 1:
        raise ValueError("k and s must be at least 1")
    cost = comb(len(points), k) * len(curves)
    if cost > DOF_GUARD:
        raise GuardExceededError(f"C({len(points)}, {k}) * {len(curves)} = {cost} exceeds {DOF_GUARD}")
    masks = _masks(points, curves)
    violations = []

    # a k-subset on no curve cannot violate (1) since s >= 1, so only subsets
    # of some curve's point set need counting
    containing: dict[tuple[int, ...], list[int]] = {}
    for ci, mask in enumerate(masks):
        for subset in itertools.combinations(_bits(mask), k):
            containing.setdefault(subset, []).append(ci)
    for subset in sorted(containing):
        cs = containing[subset]
        if len(cs) > s:
            violations.append(Violation("subset", subset, tuple(cs)))

    for c1, c2 in itertools.combinations(range(len(curves)), 2):
        shared = masks[c1] & masks[c2]
        if bin(shared).count("1") > s:
            violations.append(Violation("pair", _bits(shared), (c1, c2)))
    return violations
