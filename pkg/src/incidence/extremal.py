"""Sharpness families for the incidence bound and standard test sets."""

from __future__ import annotations

import enum
import random
from fractions import Fraction

from .field import QQ, TowerDescriptor
from .geometry import Configuration, Point, canonical_line, incident, line_through
from .sumproduct import ElementSet


class FamilyId(str, enum.Enum):
    ST_GRID = "st_grid"
    POINT_HEAVY = "point_heavy"
    LINE_HEAVY = "line_heavy"
    SQUARE_GRID = "square_grid"
    ARITHMETIC_PROGRESSION = "arithmetic_progression"
    GEOMETRIC_PROGRESSION = "geometric_progression"


INCIDENCE_FAMILIES = (FamilyId.ST_GRID, FamilyId.POINT_HEAVY, FamilyId.LINE_HEAVY)
SET_FAMILIES = (FamilyId.ARITHMETIC_PROGRESSION, FamilyId.GEOMETRIC_PROGRESSION)


def generate(family, N: int, tower: TowerDescriptor = QQ, ratio=2):
    """Build a family member; sets come back as :class:`ElementSet`.

    st_grid: points ``1 <= x <= N, 1 <= y <= 2N^2`` and lines
    ``y = a x + b`` with ``1 <= a <= N, 1 <= b <= N^2``.
    point_heavy: ``N`` points on ``y = 0``.  line_heavy: the origin and
    the lines ``y = a x``, ``1 <= a <= N``.
    """
    family = FamilyId(family)
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    e = tower.element

    if family is FamilyId.ST_GRID:
        points = [Point(e(x), e(y)) for x in range(1, N + 1) for y in range(1, 2 * N * N + 1)]
        lines = [canonical_line(e(a), e(-1), e(b)) for a in range(1, N + 1) for b in range(1, N * N + 1)]
        return Configuration.build(points, lines, tower)
    if family is FamilyId.POINT_HEAVY:
        points = [Point(e(x), e(0)) for x in range(1, N + 1)]
        return Configuration.build(points, [canonical_line(e(0), e(1), e(0))], tower)
    if family is FamilyId.LINE_HEAVY:
        lines = [canonical_line(e(a), e(-1), e(0)) for a in range(1, N + 1)]
        return Configuration.build([Point(e(0), e(0))], lines, tower)
    if family is FamilyId.SQUARE_GRID:
        points = [Point(e(x), e(y)) for x in range(1, N + 1) for y in range(1, N + 1)]
        return Configuration.build(points, (), tower)
    if family is FamilyId.ARITHMETIC_PROGRESSION:
        return ElementSet.of(e(i) for i in range(1, N + 1))

    r = Fraction(ratio)
    if r in (0, 1, -1):
        raise ValueError(f"geometric ratio must not be 0 or +-1, got {ratio}")
    return ElementSet.of(e(r**i) for i in range(N))


def expected_incidences(family, N: int) -> int:
    family = FamilyId(family)
    if family is FamilyId.ST_GRID:
        return N**4
    if family in (FamilyId.POINT_HEAVY, FamilyId.LINE_HEAVY):
        return N
    raise ValueError(f"{family.value} is not an incidence family")


def collinear_points(m: int, tower: TowerDescriptor = QQ) -> list[Point]:
    """``m`` points on the line ``y = 2x + 1``."""
    e = tower.element
    return [Point(e(i), e(2 * i + 1)) for i in range(m)]


def general_position_points(m: int, seed: int = 0, tower: TowerDescriptor = QQ, bound: int = 1000) -> list[Point]:
    """``m`` random rational points with no three collinear.

    Candidates are drawn one at a time and rejected if they repeat a point
    or fall on a line through two accepted points.
    """
    rng = random.Random(seed)
    e = tower.element
    pts: list[Point] = []
    lines = set()
    while len(pts) < m:
        p = Point(e(Fraction(rng.randint(-bound, bound), rng.randint(1, 20))),
                  e(Fraction(rng.randint(-bound, bound), rng.randint(1, 20))))
        if p in pts or any(incident(p, l) for l in lines):
            continue
        for q in pts:
            lines.add(line_through(p, q))
        pts.append(p)
    return pts
