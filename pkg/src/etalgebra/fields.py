"""Exact coefficient fields: Q, prime fields, and towers of simple extensions.

Field objects are domains: they own the arithmetic and act on *raw* values
that are already in canonical form.

=============  ==========================================================
field          raw value
=============  ==========================================================
``QQ``         ``fractions.Fraction`` (always reduced, positive denominator)
``GF(p)``      ``int`` in ``range(p)``
extension      ``tuple`` of base-field values, length ``deg(modulus)``
=============  ==========================================================

Canonical forms are unique per value, so ``==``, ``hash`` and ``<`` on raw
values give value equality and a deterministic total order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt

from . import dense
from .errors import InvalidInputError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def rational_sqrt(x: Fraction):
    """Nonnegative rational square root of ``x`` or None."""
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


class Field:
    """Shared behaviour; subclasses provide the primitive operations."""

    characteristic: int
    order: int | None
    degree: int
    base: "Field | None" = None

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def prime_field(self) -> "Field":
        F = self
        while F.base is not None:
            F = F.base
        return F

    def tower(self):
        """Fields from ``self`` down to the prime field."""
        out, F = [], self
        while F is not None:
            out.append(F)
            F = F.base
        return out

    def extends(self, other: "Field") -> bool:
        return other in self.tower()

    def coerce(self, x, source: "Field"):
        """Image of ``x`` under the tower inclusion ``source -> self``."""
        if source == self:
            return x
        if self.base is None:
            raise InvalidInputError(f"{source!r} is not a subfield of {self!r}")
        return self.embed_base(self.base.coerce(x, source))

    def descend(self, x, target: "Field"):
        """``x`` as an element of the subfield ``target``, or None if it is not in it."""
        if target == self:
            return x
        if self.base is None:
            raise InvalidInputError(f"{target!r} is not a subfield of {self!r}")
        if any(not self.base.is_zero(c) for c in x[1:]):
            return None
        return self.base.descend(x[0], target)

    def elements(self):
        raise InvalidInputError(f"{self!r} is infinite")

    def nonzero_scalars(self, count: int):
        """First ``count`` distinct nonzero values in a fixed order."""
        out = []
        if self.is_finite:
            for x in self.elements():
                if not self.is_zero(x):
                    out.append(x)
                    if len(out) == count:
                        break
            return out
        return [self.from_int(i) for i in range(1, count + 1)]

    def sqrt(self, a):
        """A square root of ``a`` in this field, or None."""
        if self.is_zero(a):
            return self.zero
        if self.is_finite:
            if self.characteristic == 2:
                # squaring is bijective
                return self.pow(a, self.order // 2)
            for x in self.elements():
                if self.mul(x, x) == a:
                    return x
            return None
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    order = None
    degree = 1
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a / b

    def from_int(self, n: int):
        return Fraction(n)

    def sqrt(self, a):
        return rational_sqrt(a)

    def load(self, obj):
        if isinstance(obj, bool):
            raise InvalidInputError(f"not a rational: {obj!r}")
        if isinstance(obj, (int, Fraction)):
            return Fraction(obj)
        if isinstance(obj, str):
            try:
                return Fraction(obj.strip())
            except ValueError:
                pass
        raise InvalidInputError(f"not a rational: {obj!r}")

    def dump(self, a):
        return f"{a.numerator}/{a.denominator}"

    def format(self, a):
        return str(a)

    def describe(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise InvalidInputError(f"characteristic {p} is not prime")
        self.p = self.characteristic = self.order = p
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return n % self.p

    def elements(self):
        return iter(range(self.p))

    def load(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise InvalidInputError(f"not an element of GF({self.p}): {obj!r}")
        try:
            return int(obj) % self.p
        except ValueError:
            raise InvalidInputError(f"not an element of GF({self.p}): {obj!r}") from None

    def dump(self, a):
        return a

    def format(self, a):
        return str(a)

    def describe(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class ExtensionField(Field):
    """``base[x]/(modulus)`` for a monic irreducible ``modulus``.

    Irreducibility is verified for finite bases (Rabin's test) and for
    quadratics over Q (non-square discriminant).  Higher-degree moduli over Q
    need ``trusted=True``.  Only one level of extension is allowed over Q.
    """

    def __init__(self, base: Field, modulus, name: str = "w", trusted: bool = False):
        mod = dense.strip(base, [base.load(c) if not _is_raw(base, c) else c for c in modulus])
        n = len(mod) - 1
        if n < 2:
            raise InvalidInputError("extension modulus must have degree >= 2")
        if mod[-1] != base.one:
            raise InvalidInputError("extension modulus must be monic")
        if base.characteristic == 0 and base.base is not None:
            raise InvalidInputError("towers over Q are limited to one quadratic extension")
        if not trusted:
            if base.is_finite:
                if not dense.is_irreducible_finite(base, mod):
                    raise InvalidInputError(f"modulus {mod} is reducible over {base!r}")
            elif n == 2:
                c0, c1 = mod[0], mod[1]
                if rational_sqrt(c1 * c1 - 4 * c0) is not None:
                    raise InvalidInputError(f"modulus {mod} is reducible over QQ")
            else:
                raise InvalidInputError("irreducibility over QQ is only checked for quadratics; pass trusted=True")
        self.base = base
        self.modulus = tuple(mod)
        self.n = n
        self.name = name
        self.characteristic = base.characteristic
        self.order = base.order ** n if base.is_finite else None
        self.degree = base.degree * n
        self.zero = (base.zero,) * n
        self.one = (base.one,) + (base.zero,) * (n - 1)
        self.gen = (base.zero, base.one) + (base.zero,) * (n - 2)

    def embed_base(self, c):
        return (c,) + (self.base.zero,) * (self.n - 1)

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        B, n, mod = self.base, self.n, self.modulus
        prod = [B.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if B.is_zero(y):
                    continue
                prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if B.is_zero(c):
                continue
            for i in range(n):
                prod[k - n + i] = B.sub(prod[k - n + i], B.mul(c, mod[i]))
        return tuple(prod[:n])

    def scalar(self, c, a):
        B = self.base
        return tuple(B.mul(c, x) for x in a)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        s, _, h = dense.gcdex(self.base, dense.strip(self.base, a), list(self.modulus))
        assert h == [self.base.one]
        return self._from_list(s)

    def _from_list(self, f):
        f = list(f) + [self.base.zero] * (self.n - len(f))
        return tuple(f[: self.n])

    def from_poly(self, f):
        """Reduce a base-field coefficient list modulo the modulus."""
        return self._from_list(dense.rem(self.base, dense.strip(self.base, f), list(self.modulus)))

    def from_int(self, n: int):
        return self.embed_base(self.base.from_int(n))

    def elements(self):
        if not self.is_finite:
            return super().elements()
        return itertools.product(list(self.base.elements()), repeat=self.n)

    def sqrt(self, a):
        if self.is_finite:
            return super().sqrt(a)
        return _quadratic_sqrt(self, a)

    def load(self, obj):
        if isinstance(obj, (list, tuple)):
            if len(obj) > self.n:
                raise InvalidInputError(f"too many coefficients for {self!r}: {obj!r}")
            return self._from_list([self.base.load(c) for c in obj])
        return self.embed_base(self.base.load(obj))

    def dump(self, a):
        return [self.base.dump(c) for c in a]

    def format(self, a):
        terms = []
        for i, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            if self.base.base is not None:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                mon = self.name if i == 1 else f"{self.name}^{i}"
                terms.append(mon if c == self.base.one else f"{cs}*{mon}")
        return " + ".join(terms) if terms else "0"

    def describe(self):
        return {
            "base": self.base.describe(),
            "modulus": [self.base.dump(c) for c in self.modulus],
            "name": self.name,
        }

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({dense_repr(self.base, self.modulus)})"


def _is_raw(F, c):
    if isinstance(F, RationalField):
        return isinstance(c, Fraction)
    if isinstance(F, PrimeField):
        return isinstance(c, int) and 0 <= c < F.p
    return isinstance(c, tuple) and len(c) == F.n


def _quadratic_sqrt(K: ExtensionField, a):
    """Square root in Q(sqrt d) for modulus x^2 - d."""
    c0, c1 = K.modulus[0], K.modulus[1]
    if c1 != 0:
        raise NotImplementedError("square roots need a modulus of the form x^2 - d")
    d = -c0
    u, v = a
    if v == 0:
        r = rational_sqrt(u)
        if r is not None:
            return (r, Fraction(0))
        r = rational_sqrt(u / d)
        if r is not None:
            return (Fraction(0), r)
        return None
    n = rational_sqrt(u * u - d * v * v)
    if n is None:
        return None
    for s in (n, -n):
        x = rational_sqrt((u + s) / 2)
        if x:
            return (x, v / (2 * x))
    return None


def dense_repr(F, f, var="x"):
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if F.is_zero(c):
            continue
        cs = F.format(c)
        if F.base is not None and i > 0:
            cs = f"({cs})"
        if i == 0:
            terms.append(cs)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            terms.append(mon if c == F.one else f"{cs}*{mon}")
    return " + ".join(terms) if terms else "0"


def load_field(obj) -> Field:
    """Parse a field descriptor: ``"QQ"``, ``"GF(p)"``, ``p``, or an extension dict."""
    if isinstance(obj, bool):
        raise InvalidInputError(f"bad field descriptor {obj!r}")
    if isinstance(obj, int):
        return PrimeField(obj)
    if isinstance(obj, str):
        s = obj.strip().replace(" ", "")
        if s in ("QQ", "Q"):
            return QQ
        if s.upper().startswith("GF(") and s.endswith(")"):
            try:
                return PrimeField(int(s[3:-1]))
            except ValueError:
                pass
        if s.isdigit():
            return PrimeField(int(s))
        raise InvalidInputError(f"bad field descriptor {obj!r}")
    if isinstance(obj, dict):
        try:
            base = load_field(obj["base"])
            modulus = obj["modulus"]
        except KeyError as exc:
            raise InvalidInputError(f"extension descriptor missing {exc}") from None
        if not isinstance(modulus, list):
            raise InvalidInputError("modulus must be a coefficient list")
        return ExtensionField(base, [base.load(c) for c in modulus], obj.get("name", "w"),
                              trusted=bool(obj.get("trusted", False)))
    raise InvalidInputError(f"bad field descriptor {obj!r}")
