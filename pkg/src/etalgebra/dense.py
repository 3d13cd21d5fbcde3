"""Dense univariate polynomial arithmetic on raw coefficient lists.

Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial is ``[]``.  Every routine takes the coefficient field ``K`` first
and touches coefficients only through ``K``'s arithmetic, so the same code
runs over Q, prime fields and extension towers.
"""

from __future__ import annotations


def strip(K, f):
    f = list(f)
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def degree(f) -> int:
    return len(f) - 1


def add(K, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = K.add(out[i], c)
    return strip(K, out)


def neg(K, f):
    return [K.neg(c) for c in f]


def sub(K, f, g):
    return add(K, f, neg(K, g))


def scale(K, f, c):
    if K.is_zero(c):
        return []
    return strip(K, [K.mul(a, c) for a in f])


def mul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return strip(K, out)


def divmod_(K, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return [], strip(K, r)
    lc_inv = K.inv(g[-1])
    q = [K.zero] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if K.is_zero(c):
            continue
        c = K.mul(c, lc_inv)
        q[k - dg] = c
        for i in range(dg + 1):
            r[k - dg + i] = K.sub(r[k - dg + i], K.mul(c, g[i]))
    return strip(K, q), strip(K, r[:dg])


def rem(K, f, g):
    return divmod_(K, f, g)[1]


def quo(K, f, g):
    return divmod_(K, f, g)[0]


def monic(K, f):
    if not f:
        return []
    return scale(K, f, K.inv(f[-1]))


def gcd(K, f, g):
    """Monic gcd (``[]`` when both inputs vanish)."""
    f, g = strip(K, f), strip(K, g)
    while g:
        f, g = g, rem(K, f, g)
    return monic(K, f)


def gcdex(K, f, g):
    """Return ``(s, t, h)`` with ``s*f + t*g = h`` and ``h`` the monic gcd."""
    r0, r1 = strip(K, f), strip(K, g)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return [], [], []
    c = K.inv(r0[-1])
    return scale(K, s0, c), scale(K, t0, c), scale(K, r0, c)


def deriv(K, f):
    return strip(K, [K.mul(K.from_int(i), f[i]) for i in range(1, len(f))])


def evaluate(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), c)
    return acc


def mulmod(K, f, g, m):
    return rem(K, mul(K, f, g), m)


def powmod(K, f, e: int, m):
    """``f**e mod m`` by square and multiply."""
    result = [K.one] if len(m) > 1 else []
    base = rem(K, f, m)
    while e:
        if e & 1:
            result = mulmod(K, result, base, m)
        e >>= 1
        if e:
            base = mulmod(K, base, base, m)
    return result


def _prime_divisors(n: int):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_finite(K, f) -> bool:
    """Rabin's test over a finite field ``K`` (exact, deterministic)."""
    f = monic(K, strip(K, f))
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = K.order
    x = [K.zero, K.one]
    frob = [x]  # frob[k] = x^(q^k) mod f
    for _ in range(n):
        frob.append(powmod(K, frob[-1], q, f))
    if strip(K, sub(K, frob[n], x)):
        return False
    for r in _prime_divisors(n):
        g = gcd(K, f, sub(K, frob[n // r], x))
        if degree(g) > 0:
            return False
    return True


def distinct_degree(K, f):
    """Distinct-degree factorization of a squarefree monic ``f`` over finite ``K``.

    Returns ``[(g, d), ...]`` where ``g`` is the product of all irreducible
    factors of degree ``d``.
    """
    f = monic(K, strip(K, f))
    q = K.order
    x = [K.zero, K.one]
    out = []
    h = x
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = powmod(K, h, q, f)
        g = gcd(K, f, sub(K, h, x))
        if degree(g) > 0:
            out.append((g, d))
            f = quo(K, f, g)
            h = rem(K, h, f)
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out
