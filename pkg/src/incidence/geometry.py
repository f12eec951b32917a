"""Points, lines and configurations over a tower."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DegenerateLineError,
    EqualPointsError,
    SingularMatrixError,
    TowerMismatchError,
)
from .field import QQ, FieldElement, TowerDescriptor

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement

    @property
    def tower(self) -> TowerDescriptor:
        return self.x.tower

    def encode(self) -> tuple[str, str]:
        return (self.x.encode(), self.y.encode())

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y + c = 0``; build it with :func:`canonical_line`."""

    a: FieldElement
    b: FieldElement
    c: FieldElement

    @property
    def tower(self) -> TowerDescriptor:
        return self.a.tower

    @property
    def is_vertical(self) -> bool:
        return self.b.is_zero()

    def encode(self) -> tuple[str, str, str]:
        return (self.a.encode(), self.b.encode(), self.c.encode())

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y + {self.c} = 0"


def point(x, y, tower: TowerDescriptor = QQ) -> Point:
    return Point(tower.element(x), tower.element(y))


def canonical_line(a, b, c, tower: TowerDescriptor | None = None) -> Line:
    """Scale ``(a, b, c)`` so the first nonzero of ``a, b`` equals 1."""
    if tower is None:
        tower = next((v.tower for v in (a, b, c) if isinstance(v, FieldElement)), QQ)
    a, b, c = tower.element(a), tower.element(b), tower.element(c)
    if not a.is_zero():
        if a.is_one():
            return Line(a, b, c)
        inv = a.inverse()
        return Line(tower.one(), b * inv, c * inv)
    if b.is_zero():
        raise DegenerateLineError("degenerate line: a = b = 0")
    if b.is_one():
        return Line(a, b, c)
    inv = b.inverse()
    return Line(a, tower.one(), c * inv)


def incident(p: Point, l: Line) -> bool:
    if p.x.tower is not l.a.tower and p.x.tower != l.a.tower:
        raise TowerMismatchError(f"point over {p.tower} tested against line over {l.tower}")
    K = l.a.tower.field
    if hasattr(K, "dot_is_zero"):
        return K.dot_is_zero((l.a.raw, l.b.raw, l.c.raw), (p.x.raw, p.y.raw, K.one))
    return (l.a * p.x + l.b * p.y + l.c).is_zero()


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise EqualPointsError(f"no unique line through the equal points {p}")
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    return canonical_line(a, b, c, p.tower)


@dataclass(frozen=True)
class Configuration:
    """Finite point and line sets over one tower, in first-seen order.

    Build through :meth:`build`, which deduplicates and records how many
    repeated inputs were dropped.
    """

    tower: TowerDescriptor
    points: tuple[Point, ...] = ()
    lines: tuple[Line, ...] = ()
    duplicate_points: int = field(default=0, compare=False)
    duplicate_lines: int = field(default=0, compare=False)

    @classmethod
    def build(
        cls,
        points: Iterable[Point] = (),
        lines: Iterable[Line] = (),
        tower: TowerDescriptor | None = None,
    ) -> "Configuration":
        points = list(points)
        lines = [canonical_line(l.a, l.b, l.c) for l in lines]
        if tower is None:
            first = points[:1] or lines[:1]
            tower = first[0].tower if first else QQ
        for p in points:
            if p.x.tower != tower or p.y.tower != tower:
                raise TowerMismatchError(f"point {p} is not over {tower}")
        for l in lines:
            if l.tower != tower:
                raise TowerMismatchError(f"line {l} is not over {tower}")
        uniq_points = tuple(dict.fromkeys(points))
        uniq_lines = tuple(dict.fromkeys(lines))
        dp = len(points) - len(uniq_points)
        dl = len(lines) - len(uniq_lines)
        if dp or dl:
            log.warning("dropped %d duplicate points and %d duplicate lines", dp, dl)
        return cls(tower, uniq_points, uniq_lines, dp, dl)

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.lines)


def affine_transform(
    cfg: Configuration,
    M: Sequence[Sequence],
    v: Sequence = (0, 0),
) -> Configuration:
    """Apply ``p -> M p + v`` to the points and the matching map to the lines.

    A line ``(a, b) . p + c = 0`` becomes ``(a, b) M^-1 . p' + c'`` with
    ``c' = c - (a, b) M^-1 v``, so incidence is preserved pair by pair.
    """
    T = cfg.tower
    (m11, m12), (m21, m22) = [[T.element(e) for e in row] for row in M]
    v1, v2 = T.element(v[0]), T.element(v[1])
    det = m11 * m22 - m12 * m21
    if det.is_zero():
        raise SingularMatrixError("affine map has singular linear part")
    dinv = det.inverse()
    i11, i12, i21, i22 = m22 * dinv, -m12 * dinv, -m21 * dinv, m11 * dinv
    points = [Point(m11 * p.x + m12 * p.y + v1, m21 * p.x + m22 * p.y + v2) for p in cfg.points]
    lines = []
    for l in cfg.lines:
        a = l.a * i11 + l.b * i21
        b = l.a * i12 + l.b * i22
        lines.append(canonical_line(a, b, l.c - a * v1 - b * v2, T))
    return Configuration.build(points, lines, T)
