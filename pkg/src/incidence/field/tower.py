"""Fields finitely generated over the rationals, built one level at a time.

A tower is a chain of levels over ``Q``.  Each level stores its elements
("raws") in a canonical form, so two raws are equal as Python values exactly
when they denote the same field element:

* ``Q``: a reduced :class:`gmpy2.mpq`.
* ``Q(t1, ..., tk)``, the leading run of transcendental generators: a sympy
  fraction of integer polynomials, reduced by their gcd, with integer
  content 1 and a positive lex-leading denominator coefficient (lex order on
  the generators in tower order).
* ``F(t)``, a transcendental generator above an algebraic one: a pair
  ``(num, den)`` of polynomials in ``t`` over ``F`` with
  ``gcd(num, den) == 1`` and ``den`` monic.
* ``F[s]/(m)``, ``s`` algebraic with monic minimal polynomial ``m``: the
  remainder modulo ``m``, a polynomial of degree ``< deg m``.

Uniqueness holds level by level: reduced fractions over a UFD are unique up
to units, the normalization pins the unit, and remainders modulo a monic
polynomial are unique.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq
from sympy import ZZ
from sympy.polys.fields import field as sympy_field

from ..errors import (
    BadPointError,
    DivisionByZeroError,
    InvalidTowerError,
    TowerMismatchError,
    UnknownGeneratorError,
    UnsupportedTowerError,
    ZeroDivisorError,
)
from . import polys

TRANSCENDENTAL = "transcendental"
ALGEBRAIC = "algebraic"

_ATOM = re.compile(r"^(?:[A-Za-z_][A-Za-z0-9_]*(?:\^\d+)?|\d+)$")


def _top_level_sum(s: str) -> bool:
    """True if ``s`` has a binary + or - outside parentheses."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and s[i - 1] not in "*/^(":
            return True
    return False


def _wrap(s: str) -> str:
    return f"({s})" if _top_level_sum(s) else s


def format_poly(p, var: str, K) -> str:
    if not p:
        return "0"
    terms = []
    minus_one = K.neg(K.one)
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if K.is_zero(c):
            continue
        if k == 0:
            terms.append(K.format(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if K.is_one(c):
            terms.append(mono)
        elif c == minus_one:
            terms.append("-" + mono)
        else:
            terms.append(f"{_wrap(K.format(c))}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class RationalField:
    """The prime field ``Q``; raws are :class:`gmpy2.mpq`."""

    name = None
    zero = mpq(0)
    one = mpq(1)

    def is_zero(self, a) -> bool:
        return not a

    def is_one(self, a) -> bool:
        return a == 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZeroError("division by zero")
        return 1 / a

    def from_int(self, n: int):
        return mpq(n)

    def from_rational(self, q):
        return mpq(q)

    def format(self, a) -> str:
        return str(a)

    def evaluate(self, a, values):
        return a


def _format_mpoly(p, names) -> str:
    if not p:
        return "0"
    terms = []
    for monom, c in p.terms():
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        if not factors:
            terms.append(str(c))
            continue
        mono = "*".join(factors)
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class RationalFunctionField:
    """``Q(t1, ..., tk)`` backed by sympy's sparse rational function field."""

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        self.name = ",".join(self.names)
        self.K = sympy_field(self.names, ZZ)[0]
        self.zero = self.K.zero
        self.one = self.K.one
        self.gens = dict(zip(self.names, self.K.gens))
        self._probe_point = tuple(1_000_003 + 7919 * i for i in range(len(self.names)))
        self._probe_cached = lru_cache(maxsize=1 << 16)(self._probe_frac)

    def is_zero(self, a) -> bool:
        return not a

    def is_one(self, a) -> bool:
        return a == self.one

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def _probe(self, p) -> int:
        acc = 0
        for monom, c in p.items():
            term = int(c)
            for v, e in zip(self._probe_point, monom):
                term *= v**e
            acc += term
        return acc

    def _probe_frac(self, a):
        # value at a fixed integer point, or None where the denominator vanishes;
        # a nonzero value there proves the element nonzero
        d = self._probe(a.denom)
        return mpq(self._probe(a.numer), d) if d else None

    def dot_is_zero(self, xs, ys) -> bool:
        """Whether ``sum x_i*y_i`` vanishes, without normalizing the sum."""
        total = mpq(0)
        for x, y in zip(xs, ys):
            vx, vy = self._probe_cached(x), self._probe_cached(y)
            if vx is None or vy is None:
                total = None
                break
            total += vx * vy
        if total:
            return False
        # cross-multiplied numerators, skipping gcds
        fracs = [(x.numer * y.numer, x.denom * y.denom) for x, y in zip(xs, ys)]
        total = self.K.ring.zero
        for i, (n, _) in enumerate(fracs):
            for j, (_, d) in enumerate(fracs):
                if j != i:
                    n = n * d
            total += n
        return not total

    def inv(self, a):
        if not a:
            raise DivisionByZeroError("division by zero")
        return 1 / a

    def from_int(self, n: int):
        return self.K(n)

    def from_rational(self, q):
        q = mpq(q)
        return self.K(int(q.numerator)) / int(q.denominator)

    def lift(self, c):
        return self.from_rational(c)

    def format(self, a) -> str:
        ns = _format_mpoly(a.numer, self.names)
        if a.denom == 1:
            return ns
        ds = _format_mpoly(a.denom, self.names)
        if not _ATOM.match(ds):
            ds = f"({ds})"
        return f"{_wrap(ns)}/{ds}"

    def _eval_poly(self, p, values):
        point = [values[n] for n in self.names]
        acc = mpq(0)
        for monom, c in p.terms():
            term = mpq(c)
            for v, e in zip(point, monom):
                if e:
                    term *= v ** e
            acc += term
        return acc

    def evaluate(self, a, values):
        den = self._eval_poly(a.denom, values)
        if not den:
            raise BadPointError(
                "denominator", f"denominator {_format_mpoly(a.denom, self.names)} vanishes"
            )
        return self._eval_poly(a.numer, values) / den


class TranscendentalField:
    """``F(t)`` for a new indeterminate ``t`` over the level ``base``."""

    def __init__(self, base, name: str):
        self.base = base
        self.name = name
        K = base
        self._one_poly = (K.one,)
        self.zero = ((), self._one_poly)
        self.one = (self._one_poly, self._one_poly)
        self.gen = ((K.zero, K.one), self._one_poly)

    def _reduce(self, num, den):
        K = self.base
        if not den:
            raise DivisionByZeroError("division by zero")
        if not num:
            return self.zero
        if len(den) > 1:
            g = polys.gcd(num, den, K)
            if len(g) > 1:
                num = polys.quo(num, g, K)
                den = polys.quo(den, g, K)
        lc = den[-1]
        if not K.is_one(lc):
            lc_inv = K.inv(lc)
            num = polys.scale(num, lc_inv, K)
            den = polys.scale(den, lc_inv, K)
        return (num, den)

    def is_zero(self, a) -> bool:
        return not a[0]

    def is_one(self, a) -> bool:
        return a == self.one

    def add(self, a, b):
        K = self.base
        (an, ad), (bn, bd) = a, b
        if not an:
            return b
        if not bn:
            return a
        if ad == bd:
            num = polys.add(an, bn, K)
            if len(ad) == 1:
                return (num, ad) if num else self.zero
            return self._reduce(num, ad)
        g = polys.gcd(ad, bd, K)
        if len(g) == 1:
            num = polys.add(polys.mul(an, bd, K), polys.mul(bn, ad, K), K)
            return self._reduce(num, polys.mul(ad, bd, K))
        ad_g = polys.quo(ad, g, K)
        bd_g = polys.quo(bd, g, K)
        num = polys.add(polys.mul(an, bd_g, K), polys.mul(bn, ad_g, K), K)
        return self._reduce(num, polys.mul(ad, bd_g, K))

    def neg(self, a):
        return (polys.neg(a[0], self.base), a[1])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        K = self.base
        (an, ad), (bn, bd) = a, b
        if not an or not bn:
            return self.zero
        if len(ad) == 1 and len(bd) == 1:
            return (polys.mul(an, bn, K), ad)
        g1 = polys.gcd(an, bd, K)
        g2 = polys.gcd(bn, ad, K)
        if len(g1) > 1:
            an, bd = polys.quo(an, g1, K), polys.quo(bd, g1, K)
        if len(g2) > 1:
            bn, ad = polys.quo(bn, g2, K), polys.quo(ad, g2, K)
        num = polys.mul(an, bn, K)
        den = polys.mul(ad, bd, K)
        lc = den[-1]
        if not K.is_one(lc):
            lc_inv = K.inv(lc)
            num = polys.scale(num, lc_inv, K)
            den = polys.scale(den, lc_inv, K)
        return (num, den)

    def inv(self, a):
        num, den = a
        if not num:
            raise DivisionByZeroError("division by zero")
        K = self.base
        lc = num[-1]
        if K.is_one(lc):
            return (den, num)
        lc_inv = K.inv(lc)
        return (polys.scale(den, lc_inv, K), polys.scale(num, lc_inv, K))

    def lift(self, c):
        return (polys.const(c, self.base), self._one_poly)

    def from_int(self, n: int):
        return self.lift(self.base.from_int(n))

    def from_rational(self, q):
        return self.lift(self.base.from_rational(q))

    def format(self, a) -> str:
        num, den = a
        K = self.base
        ns = format_poly(num, self.name, K)
        if len(den) == 1:
            return ns
        ds = format_poly(den, self.name, K)
        if not _ATOM.match(ds):
            ds = f"({ds})"
        return f"{_wrap(ns)}/{ds}"

    def evaluate(self, a, values):
        K = self.base
        t = values[self.name]
        num = polys.evaluate(tuple(K.evaluate(c, values) for c in a[0]), t, RATIONALS)
        den = polys.evaluate(tuple(K.evaluate(c, values) for c in a[1]), t, RATIONALS)
        if not den:
            raise BadPointError(
                "denominator", f"denominator {format_poly(a[1], self.name, K)} vanishes"
            )
        return num / den


class AlgebraicField:
    """``F[s]/(m)`` for a monic squarefree ``m`` over the level ``base``."""

    def __init__(self, base, name: str, modulus):
        self.base = base
        self.name = name
        self.modulus = modulus
        K = base
        self.zero = ()
        self.one = (K.one,)
        self.gen = (K.zero, K.one)

    def is_zero(self, a) -> bool:
        return not a

    def is_one(self, a) -> bool:
        return len(a) == 1 and self.base.is_one(a[0])

    def add(self, a, b):
        return polys.add(a, b, self.base)

    def sub(self, a, b):
        return polys.sub(a, b, self.base)

    def neg(self, a):
        return polys.neg(a, self.base)

    def mul(self, a, b):
        p = polys.mul(a, b, self.base)
        if len(p) >= len(self.modulus):
            p = polys.rem(p, self.modulus, self.base)
        return p

    def inv(self, a):
        if not a:
            raise DivisionByZeroError("division by zero")
        K = self.base
        s, g = polys.gcdex(a, self.modulus, K)
        if len(g) > 1:
            raise ZeroDivisorError(self.name, format_poly(g, self.name, K))
        return polys.rem(s, self.modulus, K)

    def lift(self, c):
        return polys.const(c, self.base)

    def from_int(self, n: int):
        return self.lift(self.base.from_int(n))

    def from_rational(self, q):
        return self.lift(self.base.from_rational(q))

    def format(self, a) -> str:
        return format_poly(a, self.name, self.base)

    def evaluate(self, a, values):
        raise UnsupportedTowerError(
            f"cannot specialize algebraic generator {self.name!r}"
        )


RATIONALS = RationalField()


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator of a tower.

    ``minpoly`` lists the coefficients of the monic minimal polynomial,
    constant term first, as element expressions over the generators that
    precede this one.  It is ``None`` for transcendental generators.
    """

    name: str
    kind: str = TRANSCENDENTAL
    minpoly: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in (TRANSCENDENTAL, ALGEBRAIC):
            raise InvalidTowerError(f"unknown generator kind {self.kind!r}")
        if self.minpoly is not None:
            object.__setattr__(self, "minpoly", tuple(str(c) for c in self.minpoly))
        if (self.kind == ALGEBRAIC) != (self.minpoly is not None):
            raise InvalidTowerError(
                f"generator {self.name!r}: a minimal polynomial is required "
                "exactly for algebraic generators"
            )


@dataclass(frozen=True)
class TowerDescriptor:
    generators: tuple[GeneratorSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        names = [g.name for g in self.generators]
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise InvalidTowerError(f"invalid generator name {n!r}")
        if len(set(names)) != len(names):
            raise InvalidTowerError(f"duplicate generator names in {names}")
        self.levels  # validates minimal polynomials eagerly

    @classmethod
    def of(cls, *specs: str | GeneratorSpec | tuple) -> "TowerDescriptor":
        """Shorthand: ``TowerDescriptor.of("t", ("s", ["-t", "0", "1"]))``."""
        gens = []
        for s in specs:
            if isinstance(s, GeneratorSpec):
                gens.append(s)
            elif isinstance(s, str):
                gens.append(GeneratorSpec(s))
            else:
                name, minpoly = s
                gens.append(GeneratorSpec(name, ALGEBRAIC, tuple(minpoly)))
        return cls(tuple(gens))

    @cached_property
    def levels(self) -> tuple:
        from .parse import parse_raw

        gens = self.generators
        levels = [RATIONALS]
        i = 0
        while i < len(gens) and gens[i].kind == TRANSCENDENTAL:
            i += 1
        if i:
            levels.append(RationalFunctionField([g.name for g in gens[:i]]))
        for j in range(i, len(gens)):
            g = gens[j]
            base = levels[-1]
            if g.kind == TRANSCENDENTAL:
                levels.append(TranscendentalField(base, g.name))
                continue
            sub = TowerDescriptor.__new__(TowerDescriptor)
            object.__setattr__(sub, "generators", gens[:j])
            sub.__dict__["levels"] = tuple(levels)
            coeffs = tuple(parse_raw(c, sub) for c in g.minpoly)
            m = polys.strip(coeffs, base)
            if len(m) < 3:
                raise InvalidTowerError(f"minimal polynomial of {g.name!r} must have degree >= 2")
            if not base.is_one(m[-1]):
                raise InvalidTowerError(f"minimal polynomial of {g.name!r} is not monic")
            if len(polys.gcd(m, polys.deriv(m, base), base)) > 1:
                raise InvalidTowerError(f"minimal polynomial of {g.name!r} is not squarefree")
            levels.append(AlgebraicField(base, g.name, m))
        return tuple(levels)

    @property
    def field(self):
        return self.levels[-1]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def transcendental_names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators if g.kind == TRANSCENDENTAL)

    @property
    def is_purely_transcendental(self) -> bool:
        return all(g.kind == TRANSCENDENTAL for g in self.generators)

    @cached_property
    def generator_raws(self) -> dict:
        out = {}
        levels = self.levels
        for k, level in enumerate(levels[1:], start=1):
            if isinstance(level, RationalFunctionField):
                fresh = level.gens
            else:
                fresh = {level.name: level.gen}
            for name, raw in fresh.items():
                for above in levels[k + 1:]:
                    raw = above.lift(raw)
                out[name] = raw
        return out

    def gen(self, name: str) -> "FieldElement":
        try:
            return FieldElement(self, self.generator_raws[name])
        except KeyError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    def element(self, value) -> "FieldElement":
        """Coerce an int, rational, expression string or element into this tower."""
        if isinstance(value, FieldElement):
            if value.tower != self:
                raise TowerMismatchError(f"element of {value.tower} used in {self}")
            return value
        if isinstance(value, str):
            from .parse import parse_element

            return parse_element(value, self)
        if isinstance(value, int):
            return FieldElement(self, self.field.from_int(value))
        if isinstance(value, (Fraction, type(mpq(0)))):
            return FieldElement(self, self.field.from_rational(mpq(value)))
        raise TypeError(f"cannot coerce {type(value).__name__} into a field element")

    def zero(self) -> "FieldElement":
        return FieldElement(self, self.field.zero)

    def one(self) -> "FieldElement":
        return FieldElement(self, self.field.one)

    def __str__(self) -> str:
        if not self.generators:
            return "Q"
        parts = []
        for g in self.generators:
            if g.kind == TRANSCENDENTAL:
                parts.append(g.name)
            else:
                parts.append(f"{g.name}:[{', '.join(g.minpoly)}]")
        return f"Q({', '.join(parts)})"

    def to_dict(self) -> list[dict]:
        out = []
        for g in self.generators:
            d = {"name": g.name, "kind": g.kind}
            if g.minpoly is not None:
                d["minpoly"] = list(g.minpoly)
            out.append(d)
        return out

    @classmethod
    def from_dict(cls, data: Sequence[Mapping]) -> "TowerDescriptor":
        gens = []
        for d in data:
            mp = d.get("minpoly")
            gens.append(GeneratorSpec(d["name"], d.get("kind", TRANSCENDENTAL),
                                      None if mp is None else tuple(mp)))
        return cls(tuple(gens))


QQ = TowerDescriptor()


class FieldElement:
    """An immutable element of a tower, always held in canonical form."""

    __slots__ = ("tower", "raw")

    def __init__(self, tower: TowerDescriptor, raw):
        self.tower = tower
        self.raw = raw

    def _coerce(self, other) -> "FieldElement":
        if type(other) is FieldElement:
            if other.tower is not self.tower and other.tower != self.tower:
                raise TowerMismatchError(f"cannot combine elements of {self.tower} and {other.tower}")
            return other
        if isinstance(other, (int, Fraction, type(mpq(0)))):
            return FieldElement(self.tower, self.tower.field.from_rational(mpq(other)))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.tower, self.tower.field.add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.tower, self.tower.field.sub(self.raw, other.raw))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.tower, self.tower.field.mul(self.raw, other.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return FieldElement(self.tower, self.tower.field.neg(self.raw))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        K = self.tower.field
        acc, sq = K.one, base.raw
        while e:
            if e & 1:
                acc = K.mul(acc, sq)
            e >>= 1
            if e:
                sq = K.mul(sq, sq)
        return FieldElement(self.tower, acc)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.field.inv(self.raw))

    def is_zero(self) -> bool:
        return self.tower.field.is_zero(self.raw)

    def is_one(self) -> bool:
        return self.tower.field.is_one(self.raw)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if type(other) is FieldElement:
            return self.raw == other.raw and (other.tower is self.tower or other.tower == self.tower)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.raw == other.raw

    def __hash__(self) -> int:
        return hash(self.raw)

    def encode(self) -> str:
        """Canonical text encoding; equal elements have identical encodings."""
        return self.tower.field.format(self.raw)

    __str__ = encode

    def __repr__(self) -> str:
        return f"FieldElement({self.encode()!r} in {self.tower})"

    def __reduce__(self):
        return (FieldElement, (self.tower, self.raw))


def elements(tower: TowerDescriptor, values: Iterable) -> list[FieldElement]:
    return [tower.element(v) for v in values]
