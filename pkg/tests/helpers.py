"""Seeded random generators shared by the test modules."""

import random

from incidence.field import QQ, TowerDescriptor

TOWERS = {
    "Q": QQ,
    "Q(t)": TowerDescriptor.of("t"),
    "Q(t1,t2)": TowerDescriptor.of("t1", "t2"),
    "Q[s]/(s^2-2)": TowerDescriptor.of(("s", ["-2", "0", "1"])),
    "Q(t)[s]/(s^2-t)": TowerDescriptor.of("t", ("s", ["-t", "0", "1"])),
}


def random_poly(tower, rng: random.Random, terms=3, max_deg=2, coeff=5):
    gens = [tower.gen(n) for n in tower.names]
    acc = tower.zero()
    for _ in range(rng.randint(1, terms)):
        c = rng.randint(-coeff, coeff)
        if rng.random() < 0.3:
            c = tower.element(f"{c}/{rng.randint(1, coeff)}")
        term = tower.element(c)
        for g in gens:
            term = term * g ** rng.randint(0, max_deg)
        acc = acc + term
    return acc


def random_element(tower, rng: random.Random, **kw):
    num = random_poly(tower, rng, **kw)
    if rng.random() < 0.4 or not tower.generators:
        return num
    while True:
        den = random_poly(tower, rng, **kw)
        if not den.is_zero():
            return num / den


def random_nonzero(tower, rng, **kw):
    while True:
        a = random_element(tower, rng, **kw)
        if not a.is_zero():
            return a


def random_point(tower, rng, **kw):
    from incidence.geometry import Point

    return Point(random_element(tower, rng, **kw), random_element(tower, rng, **kw))


def random_configuration(tower, rng, m, n, planted=0.5):
    """Random points and lines where about ``planted`` of the lines are
    forced through a chosen point, so incidences are not all accidental."""
    from incidence.geometry import Configuration, canonical_line, line_through

    small = dict(terms=2, max_deg=1, coeff=4)
    points = [random_point(tower, rng, **small) for _ in range(m)]
    lines = []
    while len(lines) < n:
        if points and len(points) > 1 and rng.random() < planted:
            p, q = rng.sample(points, 2)
            if p != q:
                lines.append(line_through(p, q))
            continue
        if points and rng.random() < planted:
            p = rng.choice(points)
            slope = random_element(tower, rng, **small)
            lines.append(canonical_line(slope, -1, p.y - slope * p.x, tower))
            continue
        a, b, c = (random_element(tower, rng, **small) for _ in range(3))
        if a.is_zero() and b.is_zero():
            continue
        lines.append(canonical_line(a, b, c, tower))
    return Configuration.build(points, lines, tower)


def grid_points(k, tower=None):
    from incidence.field import QQ
    from incidence.geometry import point

    return [point(x, y, tower or QQ) for x in range(k) for y in range(k)]
