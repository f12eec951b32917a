"""Specialization homomorphisms: transcendental generators sent to rationals.

Evaluating every transcendental generator at a rational value is a ring map
on the elements defined there.  For a fixed finite configuration only
finitely many values break injectivity on the data or the incidence
relation, so a random assignment is almost always generic.  The checks here
reject every non-generic assignment outright instead of tolerating it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from gmpy2 import mpq

from .engine import incidence_matrix
from .errors import BadPointError, RetriesExhaustedError, UnsupportedTowerError
from .field import QQ, FieldElement, TowerDescriptor
from .geometry import Configuration, Point, canonical_line

NUM_RANGE = 10**6
DEN_RANGE = 100


@dataclass(frozen=True)
class Assignment:
    """Rational values for exactly the transcendental generators of a tower."""

    values: Mapping[str, object]

    def __post_init__(self):
        object.__setattr__(
            self, "values", MappingProxyType({k: mpq(v) for k, v in self.values.items()})
        )

    @classmethod
    def for_tower(cls, tower: TowerDescriptor, values: Mapping) -> "Assignment":
        _require_transcendental(tower)
        missing = set(tower.transcendental_names) - set(values)
        extra = set(values) - set(tower.transcendental_names)
        if missing or extra:
            raise ValueError(f"assignment must cover exactly {tower.transcendental_names}")
        return cls(values)

    def to_dict(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.values.items()}

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))

    def __eq__(self, other):
        return isinstance(other, Assignment) and dict(self.values) == dict(other.values)


def _require_transcendental(tower: TowerDescriptor) -> None:
    if not tower.is_purely_transcendental:
        raise UnsupportedTowerError(
            f"{tower} has algebraic generators; only transcendental generators can be specialized"
        )


def specialize_element(e: FieldElement, asg: Assignment) -> FieldElement:
    _require_transcendental(e.tower)
    return FieldElement(QQ, e.tower.field.evaluate(e.raw, asg.values))


def specialize_config(cfg: Configuration, asg: Assignment) -> Configuration:
    """Specialize every coordinate and coefficient, or raise :class:`BadPointError`.

    Raised when a denominator vanishes, two distinct points or two distinct
    lines become equal, or a line loses both of its linear coefficients.
    """
    _require_transcendental(cfg.tower)
    vals = asg.values
    ev = cfg.tower.field.evaluate

    def sp(x: FieldElement) -> FieldElement:
        return FieldElement(QQ, ev(x.raw, vals))

    points = []
    seen: dict[Point, int] = {}
    for i, p in enumerate(cfg.points):
        q = Point(sp(p.x), sp(p.y))
        if q in seen:
            raise BadPointError(
                "point_collapse", f"points {seen[q]} and {i} both specialize to {q}"
            )
        seen[q] = i
        points.append(q)

    lines = []
    seen_lines: dict = {}
    for j, l in enumerate(cfg.lines):
        a, b, c = sp(l.a), sp(l.b), sp(l.c)
        if a.is_zero() and b.is_zero():
            raise BadPointError("line_degenerate", f"line {j} specializes to a = b = 0")
        k = canonical_line(a, b, c, QQ)
        if k in seen_lines:
            raise BadPointError(
                "line_collapse", f"lines {seen_lines[k]} and {j} both specialize to {k}"
            )
        seen_lines[k] = j
        lines.append(k)
    return Configuration(QQ, tuple(points), tuple(lines))


def _sample(names, rng: random.Random, scale: int) -> Assignment:
    return Assignment({
        n: Fraction(rng.randint(-NUM_RANGE * scale, NUM_RANGE * scale), rng.randint(1, DEN_RANGE * scale))
        for n in names
    })


def generic_specialize(
    cfg: Configuration, seed: int = 0, max_retries: int = 32
) -> tuple[Configuration, Assignment]:
    """Draw seeded assignments until one is generic for ``cfg``.

    Numerators come from ``[-10^6, 10^6]`` and denominators from
    ``[1, 100]``; both ranges double after every rejection.
    """
    _require_transcendental(cfg.tower)
    names = cfg.tower.transcendental_names
    if not names:
        return cfg, Assignment({})
    rng = random.Random(seed)
    last = None
    scale = 1
    for _ in range(max_retries):
        asg = _sample(names, rng, scale)
        try:
            return specialize_config(cfg, asg), asg
        except BadPointError as err:
            last = err
            scale *= 2
    raise RetriesExhaustedError(max_retries, last)


@dataclass
class InvarianceReport:
    trials: int
    passes: int = 0
    failures: int = 0
    mismatches: list[dict] = field(default_factory=list)
    assignments: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.passes == self.trials

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "mismatches": self.mismatches,
            "assignments": self.assignments,
        }


def trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def invariance_check(
    cfg: Configuration, trials: int = 100, seed: int = 0, max_retries: int = 32
) -> InvarianceReport:
    """Compare the full incidence matrix before and after each specialization."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    before = incidence_matrix(cfg)
    report = InvarianceReport(trials)
    for t in range(trials):
        spec, asg = generic_specialize(cfg, trial_seed(seed, t), max_retries)
        after = incidence_matrix(spec)
        report.assignments.append(asg.to_dict())
        bad = [
            (i, j)
            for i, row in enumerate(before)
            for j, v in enumerate(row)
            if after[i][j] != v
        ]
        if bad:
            report.failures += 1
            report.mismatches.append({"trial": t, "assignment": asg.to_dict(), "entries": bad})
        else:
            report.passes += 1
    return report
