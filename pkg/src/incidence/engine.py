"""Exact incidence counting, connecting and rich lines, and bound ratios."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .geometry import Configuration, Line, Point, incident, line_through

THREADS_ENV = "INCIDENCE_THREADS"


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class IncidenceReport:
    m: int
    n: int
    incidences: int
    st_bound: float
    st_ratio: float
    main_term_ratio: float | None

    @classmethod
    def from_counts(cls, m: int, n: int, incidences: int) -> "IncidenceReport":
        main = (m * n) ** (2 / 3)
        bound = main + m + n
        return cls(
            m=m,
            n=n,
            incidences=incidences,
            st_bound=bound,
            st_ratio=incidences / bound if bound else 0.0,
            main_term_ratio=incidences / main if m and n else None,
        )

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "incidences": self.incidences,
            "st_bound": self.st_bound,
            "st_ratio": self.st_ratio,
            "main_term_ratio": self.main_term_ratio,
        }


@dataclass(frozen=True)
class RichLineRecord:
    line: Line
    richness: int


def count_incidences_naive(cfg: Configuration) -> int:
    """Literal double loop over every (point, line) pair."""
    return sum(1 for l in cfg.lines for p in cfg.points if incident(p, l))


class PointIndex:
    """Points bucketed by each coordinate, for per-line membership counts.

    On a canonical line with ``a = 1`` a point satisfies ``x = -(b*y + c)``,
    so for every distinct ``y`` in the set there is exactly one candidate
    ``x`` to look up (or, symmetrically, one ``y`` per distinct ``x`` when
    ``b != 0``).  Horizontal and vertical lines are single lookups.
    """

    def __init__(self, points: Sequence[Point]):
        self.points = list(points)
        self.by_x: dict = defaultdict(set)
        self.by_y: dict = defaultdict(set)
        for p in points:
            self.by_x[p.x].add(p.y)
            self.by_y[p.y].add(p.x)

    def on_line(self, l: Line) -> list[Point]:
        if l.a.is_zero():
            y = -l.c
            return [Point(x, y) for x in self.by_y.get(y, ())]
        if l.b.is_zero():
            x = -l.c
            return [Point(x, y) for y in self.by_x.get(x, ())]
        out = []
        if len(self.by_y) <= len(self.by_x):
            for y, xs in self.by_y.items():
                x = -(l.b * y + l.c)
                if x in xs:
                    out.append(Point(x, y))
        else:
            binv = l.b.inverse()
            for x, ys in self.by_x.items():
                y = -(x + l.c) * binv
                if y in ys:
                    out.append(Point(x, y))
        return out

    def richness(self, l: Line) -> int:
        if l.a.is_zero():
            return len(self.by_y.get(-l.c, ()))
        if l.b.is_zero():
            return len(self.by_x.get(-l.c, ()))
        if 2 * min(len(self.by_x), len(self.by_y)) > len(self.points):
            # few repeated coordinates: direct tests are cheaper than lookups
            return sum(1 for p in self.points if incident(p, l))
        return len(self.on_line(l))


def _count_block(index: PointIndex, lines: Sequence[Line]) -> int:
    return sum(index.richness(l) for l in lines)


def count_incidences(cfg: Configuration, threads: int | None = None) -> IncidenceReport:
    """Exact incidence count with the bound ratios.

    Lines are split into contiguous blocks counted independently; the total
    is an integer sum, so the result does not depend on ``threads``.
    """
    threads = default_threads() if threads is None else max(1, threads)
    index = PointIndex(cfg.points)
    lines = cfg.lines
    if threads == 1 or len(lines) < 2:
        total = _count_block(index, lines)
    else:
        size = -(-len(lines) // threads)
        blocks = [lines[i:i + size] for i in range(0, len(lines), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(lambda b: _count_block(index, b), blocks))
    return IncidenceReport.from_counts(cfg.m, cfg.n, total)


def incidence_matrix(cfg: Configuration) -> list[list[bool]]:
    return [[incident(p, l) for l in cfg.lines] for p in cfg.points]


def connecting_lines(points: Sequence[Point]) -> list[RichLineRecord]:
    """Every line through two or more of ``points``, with its exact richness.

    Each pair votes for its connecting line; the richness of a line is the
    number of distinct points collected on it, and ``sum C(r, 2) == C(m, 2)``
    is checked against the raw pair tally.
    """
    members: dict[Line, set[int]] = {}
    pair_votes: dict[Line, int] = defaultdict(int)
    for i in range(len(points)):
        p = points[i]
        for j in range(i + 1, len(points)):
            l = line_through(p, points[j])
            s = members.get(l)
            if s is None:
                members[l] = s = set()
            s.add(i)
            s.add(j)
            pair_votes[l] += 1
    records = [RichLineRecord(l, len(s)) for l, s in members.items()]
    for r in records:
        if comb(r.richness, 2) != pair_votes[r.line]:
            raise AssertionError(f"pair tally disagrees with membership on {r.line}")
    return records


def pair_identity_holds(records: Sequence[RichLineRecord], m: int) -> bool:
    return sum(comb(r.richness, 2) for r in records) == comb(m, 2)


@dataclass(frozen=True)
class RichLinesResult:
    records: list[RichLineRecord]
    ratio: float
    threshold: int
    m: int

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "threshold": self.threshold,
            "count": len(self.records),
            "ratio": self.ratio,
            "lines": [{"line": list(r.line.encode()), "richness": r.richness} for r in self.records],
        }


def rich_lines(cfg: Configuration, n: int) -> RichLinesResult:
    """Lines of ``cfg`` carrying at least ``n`` points, and the count ratio
    ``|records| / (m^2/n^3 + m/n)``."""
    if n < 2:
        raise ValueError(f"richness threshold must be at least 2, got {n}")
    index = PointIndex(cfg.points)
    records = []
    for l in cfg.lines:
        r = index.richness(l)
        if r >= n:
            records.append(RichLineRecord(l, r))
    m = cfg.m
    bound = m * m / n**3 + m / n
    return RichLinesResult(records, len(records) / bound if bound else 0.0, n, m)


@dataclass(frozen=True)
class BeckReport:
    m: int
    max_richness: int
    num_connecting_lines: int

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "max_richness": self.max_richness,
            "num_connecting_lines": self.num_connecting_lines,
        }


def beck_report(points: Sequence[Point]) -> BeckReport:
    records = connecting_lines(points)
    return BeckReport(
        m=len(points),
        max_richness=max((r.richness for r in records), default=0),
        num_connecting_lines=len(records),
    )
