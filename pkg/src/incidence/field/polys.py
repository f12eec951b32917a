"""Dense univariate polynomials over a coefficient field ``K``.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  ``K`` is any object with the
level interface from :mod:`incidence.field.tower` (``zero``, ``one``,
``add``, ``sub``, ``mul``, ``neg``, ``inv``, ``is_zero``, ``from_int``).
"""

from __future__ import annotations


def strip(p, K):
    n = len(p)
    while n and K.is_zero(p[n - 1]):
        n -= 1
    return p if n == len(p) else tuple(p[:n])


def degree(p) -> int:
    return len(p) - 1


def const(c, K):
    return () if K.is_zero(c) else (c,)


def add(p, q, K):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = K.add(out[i], c)
    return strip(tuple(out), K)


def sub(p, q, K):
    out = list(p) + [K.zero] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = K.sub(out[i], c)
    return strip(tuple(out), K)


def neg(p, K):
    return tuple(K.neg(c) for c in p)


def scale(p, c, K):
    if K.is_zero(c):
        return ()
    if K.is_one(c):
        return p
    return strip(tuple(K.mul(a, c) for a in p), K)


def mul(p, q, K):
    if not p or not q:
        return ()
    if len(p) == 1:
        return scale(q, p[0], K)
    if len(q) == 1:
        return scale(p, q[0], K)
    out = [K.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if K.is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return strip(tuple(out), K)


def divmod_(p, q, K):
    """Quotient and remainder of ``p`` by nonzero ``q``."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    if len(p) <= dq:
        return (), p
    lc = q[-1]
    lc_inv = K.one if K.is_one(lc) else K.inv(lc)
    r = list(p)
    quot = [K.zero] * (len(p) - dq)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = r[k + dq]
        if K.is_zero(c):
            continue
        c = K.mul(c, lc_inv)
        quot[k] = c
        for j in range(dq):
            r[k + j] = K.sub(r[k + j], K.mul(c, q[j]))
        r[k + dq] = K.zero
    return strip(tuple(quot), K), strip(tuple(r[:dq]), K)


def rem(p, q, K):
    return divmod_(p, q, K)[1]


def quo(p, q, K):
    return divmod_(p, q, K)[0]


def monic(p, K):
    if not p or K.is_one(p[-1]):
        return p
    return scale(p, K.inv(p[-1]), K)


def gcd(p, q, K):
    """Monic gcd; ``gcd((), ()) == ()``."""
    while q:
        p, q = q, rem(p, q, K)
    return monic(p, K)


def gcdex(a, b, K):
    """Return ``(s, g)`` with ``g`` the monic gcd and ``s*a == g (mod b)``."""
    s0, s1 = (K.one,), ()
    while b:
        q, r = divmod_(a, b, K)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(q, s1, K), K)
    if not a:
        return (), ()
    lc_inv = K.inv(a[-1])
    return scale(s0, lc_inv, K), scale(a, lc_inv, K)


def deriv(p, K):
    return strip(tuple(K.mul(K.from_int(i), c) for i, c in enumerate(p) if i), K)


def evaluate(p, x, K):
    acc = K.zero
    for c in reversed(p):
        acc = K.add(K.mul(acc, x), c)
    return acc
