"""Univariate polynomials over exact fields: roots, splitting fields, irreducibility."""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from math import lcm

from . import dense
from .errors import InvalidInputError, UnsupportedError, UnsupportedSplittingError
from .fields import QQ, ExtensionField, Field, RationalField, dense_repr

#: finite fields up to this size are searched for roots by exhaustive evaluation
EXHAUSTIVE_ROOT_LIMIT = 2**16


class Poly:
    """Immutable polynomial; ``coeffs`` lowest degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field: Field):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(dense.strip(field, coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, field):
        return cls([field.zero, field.one], field)

    @classmethod
    def from_roots(cls, roots, field):
        f = [field.one]
        for r in roots:
            f = dense.mul(field, f, [field.neg(r), field.one])
        return cls(f, field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def _wrap(self, f):
        return Poly(f, self.field)

    def _check(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.field != self.field:
            raise InvalidInputError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._wrap(dense.add(self.field, self.coeffs, other.coeffs))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._wrap(dense.sub(self.field, self.coeffs, other.coeffs))

    def __neg__(self):
        return self._wrap(dense.neg(self.field, self.coeffs))

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._wrap(dense.mul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        q, r = dense.divmod_(self.field, self.coeffs, other.coeffs)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return dense.evaluate(self.field, self.coeffs, x)

    def __eq__(self, other):
        return isinstance(other, Poly) and other.field == self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def scale(self, c):
        return self._wrap(dense.scale(self.field, self.coeffs, c))

    def monic(self):
        return self._wrap(dense.monic(self.field, self.coeffs))

    def deriv(self):
        return self._wrap(dense.deriv(self.field, self.coeffs))

    def gcd(self, other):
        self._check(other)
        return self._wrap(dense.gcd(self.field, self.coeffs, other.coeffs))

    def over(self, K: Field):
        """Same polynomial with coefficients pushed into an extension ``K``."""
        if K == self.field:
            return self
        if not K.extends(self.field):
            raise InvalidInputError(f"{K!r} does not contain {self.field!r}")
        return Poly([K.coerce(c, self.field) for c in self.coeffs], K)

    def descend(self, F: Field):
        """Coefficients in subfield ``F``, or None."""
        out = []
        for c in self.coeffs:
            d = self.field.descend(c, F)
            if d is None:
                return None
            out.append(d)
        return Poly(out, F)

    def dump(self):
        return [self.field.dump(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({dense_repr(self.field, self.coeffs)}, {self.field!r})"


def squarefree_test(f: Poly) -> bool:
    """True iff ``f`` has no repeated root over an algebraic closure."""
    if f.is_zero():
        raise InvalidInputError("squarefree_test of the zero polynomial")
    if f.degree == 0:
        return True
    d = f.deriv()
    if d.is_zero():
        return False
    return f.gcd(d).degree == 0


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_part(n: int) -> int:
    """Squarefree integer with the same square class as ``n`` (``n != 0``)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


def _strip_root(K, f, r):
    """Divide ``f`` by ``(x - r)`` as often as possible; return (quotient, multiplicity)."""
    m = 0
    lin = [K.neg(r), K.one]
    while len(f) > 1 and K.is_zero(dense.evaluate(K, f, r)):
        f = dense.quo(K, f, lin)
        m += 1
    return f, m


def _rational_roots(f):
    K = QQ
    g = list(f)
    roots = []
    g, m = _strip_root(K, g, Fraction(0))
    roots += [Fraction(0)] * m
    if len(g) <= 1:
        return roots, g
    den = 1
    for c in g:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in g]
    cands = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        g, m = _strip_root(K, g, r)
        roots += [r] * m
        if len(g) <= 1:
            break
    return roots, g


def _quadratic_roots(K, f):
    """Roots of a degree-2 coefficient list in ``K`` (characteristic != 2)."""
    c, b, a = f
    disc = K.sub(K.mul(b, b), K.mul(K.from_int(4), K.mul(a, c)))
    s = K.sqrt(disc)
    if s is None:
        return []
    two_a = K.mul(K.from_int(2), a)
    r1 = K.div(K.sub(s, b), two_a)
    r2 = K.div(K.sub(K.neg(s), b), two_a)
    return [r1, r2]


def _finite_distinct_roots_edf(K, h):
    """Split a product of distinct linear factors over finite ``K``.

    Deterministic: the shift/multiplier runs over ``K.elements()`` in order.
    """
    h = dense.monic(K, h)
    if dense.degree(h) <= 0:
        return []
    if dense.degree(h) == 1:
        return [K.neg(h[0])]
    Q = K.order
    for delta in K.elements():
        if K.characteristic == 2:
            k = Q.bit_length() - 1
            t = [K.zero, delta]
            acc = []
            for _ in range(k):
                acc = dense.add(K, acc, dense.rem(K, t, h))
                t = dense.mulmod(K, t, t, h)
            w = acc
        else:
            w = dense.sub(K, dense.powmod(K, [delta, K.one], (Q - 1) // 2, h), [K.one])
        d = dense.gcd(K, h, w)
        if 0 < dense.degree(d) < dense.degree(h):
            return (_finite_distinct_roots_edf(K, d)
                    + _finite_distinct_roots_edf(K, dense.quo(K, h, d)))
    raise AssertionError("equal-degree splitting failed")  # unreachable for squarefree split h


def find_roots(f: Poly, E: Field | None = None, method: str = "auto"):
    """All roots of ``f`` in ``E`` (default: its own field), with multiplicity, sorted.

    ``method`` applies to finite fields: ``"exhaustive"`` evaluates at every
    element, ``"edf"`` uses equal-degree splitting of ``gcd(f, x^Q - x)``.
    """
    if f.is_zero():
        raise InvalidInputError("roots of the zero polynomial")
    E = E or f.field
    g = list(f.over(E).coeffs)
    if E.is_finite:
        if method == "auto":
            method = "exhaustive" if E.order <= EXHAUSTIVE_ROOT_LIMIT else "edf"
        if method == "exhaustive":
            distinct = [x for x in E.elements() if E.is_zero(dense.evaluate(E, g, x))]
        elif method == "edf":
            x = [E.zero, E.one]
            h = dense.gcd(E, g, dense.sub(E, dense.powmod(E, x, E.order, g), x)) if len(g) > 1 else []
            distinct = _finite_distinct_roots_edf(E, h)
            assert all(E.is_zero(dense.evaluate(E, g, r)) for r in distinct)
        else:
            raise InvalidInputError(f"unknown root method {method!r}")
        roots = []
        for r in distinct:
            g, m = _strip_root(E, g, r)
            roots += [r] * m
        return sorted(roots)
    if isinstance(E, RationalField):
        return sorted(_rational_roots(g)[0])
    # one quadratic extension of Q
    rat = Poly(g, E).descend(QQ)
    roots = []
    if rat is not None:
        qroots, rest = _rational_roots(list(rat.coeffs))
        roots += [E.coerce(r, QQ) for r in qroots]
        g = [E.coerce(c, QQ) for c in rest]
    while len(g) > 1:
        if len(g) == 2:
            r = E.neg(E.div(g[0], g[1]))
        elif len(g) == 3:
            qr = _quadratic_roots(E, g)
            if not qr:
                break
            r = qr[0]
        else:
            raise UnsupportedError(f"root finding of degree {len(g) - 1} over {E!r} is not supported")
        g, m = _strip_root(E, g, r)
        roots += [r] * m
    return sorted(roots)


@functools.lru_cache(maxsize=None)
def irreducible_polynomial(F: Field, m: int) -> Poly:
    """First monic irreducible polynomial of degree ``m`` over finite ``F``.

    Candidates run through coefficient tuples with the highest coefficient
    varying slowest, so over GF(2) the quadratic found is x^2 + x + 1.
    """
    if not F.is_finite:
        raise InvalidInputError("irreducible_polynomial needs a finite field")
    elems = list(F.elements())
    for rev in itertools.product(elems, repeat=m):
        coeffs = list(reversed(rev)) + [F.one]
        if F.is_zero(coeffs[0]):
            continue
        if dense.is_irreducible_finite(F, coeffs):
            return Poly(coeffs, F)
    raise AssertionError("no irreducible polynomial found")


@functools.lru_cache(maxsize=None)
def finite_extension(F: Field, m: int) -> Field:
    """The degree-``m`` extension of finite ``F`` built on :func:`irreducible_polynomial`."""
    if m == 1:
        return F
    return ExtensionField(F, irreducible_polynomial(F, m).coeffs, name=f"w{m}", trusted=True)


def quadratic_field(disc: Fraction) -> ExtensionField:
    """``Q(sqrt(disc))`` with modulus ``x^2 - d``, ``d`` the squarefree part."""
    disc = Fraction(disc)
    d = squarefree_part(disc.numerator * disc.denominator)
    if d == 1:
        raise InvalidInputError(f"{disc} is a rational square")
    return ExtensionField(QQ, [Fraction(-d), Fraction(0), Fraction(1)], name=f"sqrt({d})")


def is_irreducible(f: Poly) -> bool:
    F = f.field
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if F.is_finite:
        return dense.is_irreducible_finite(F, f.coeffs)
    if f.degree <= 3:
        try:
            return not find_roots(f, F)
        except UnsupportedError:
            pass
    raise UnsupportedError(f"irreducibility of a degree-{f.degree} polynomial over {F!r} is not decidable here")


def splitting_extension(f: Poly):
    """Return ``(E, roots)`` with ``f`` split over ``E``; ``roots`` sorted, one per root."""
    if not squarefree_test(f):
        raise InvalidInputError("splitting_extension needs a squarefree polynomial")
    F = f.field
    n = f.degree
    if n == 0:
        return F, []
    if F.is_finite:
        degs = [d for _, d in dense.distinct_degree(F, f.coeffs)]
        E = finite_extension(F, lcm(*degs))
        roots = find_roots(f, E)
    elif isinstance(F, RationalField):
        rat = find_roots(f, QQ)
        rest = f // Poly.from_roots(rat, QQ)
        if rest.degree == 0:
            return QQ, rat
        if rest.degree != 2:
            raise UnsupportedSplittingError(
                f"{f!r} does not split over a single quadratic extension of QQ")
        c, b, a = rest.coeffs
        E = quadratic_field(b * b - 4 * a * c)
        roots = find_roots(f, E)
    else:
        E = F
        try:
            roots = find_roots(f, E)
        except UnsupportedError as exc:
            raise UnsupportedSplittingError(str(exc)) from None
    if len(roots) != n:
        raise UnsupportedSplittingError(f"{f!r} does not split over {E!r}")
    return E, roots
