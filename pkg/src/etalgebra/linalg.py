"""Exact dense linear algebra over a field object, plus canonical subspaces.

Matrices are lists (or tuples) of rows of raw field values.  Nothing here
mutates its arguments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidInputError


def rref(K, rows, ncols=None):
    """Reduced row-echelon form.

    Returns ``(rows, pivots)`` with only the nonzero rows kept, each a tuple,
    pivot entries equal to one and pivot columns strictly increasing.
    """
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not K.is_zero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = K.inv(M[r][c])
        row = [K.mul(inv, x) for x in M[r]]
        M[r] = row
        for i in range(nrows):
            if i == r:
                continue
            f = M[i][c]
            if K.is_zero(f):
                continue
            Mi = M[i]
            M[i] = [K.sub(Mi[j], K.mul(f, row[j])) if not K.is_zero(row[j]) else Mi[j]
                    for j in range(ncols)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], tuple(pivots)


def rank(K, rows) -> int:
    return len(rref(K, rows)[1])


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_mul(K, A, B):
    Bt = transpose(B)
    out = []
    for row in A:
        out.append([_dot(K, row, col) for col in Bt])
    return out


def mat_vec(K, A, v):
    return [_dot(K, row, v) for row in A]


def _dot(K, u, v):
    acc = K.zero
    for a, b in zip(u, v):
        if K.is_zero(a) or K.is_zero(b):
            continue
        acc = K.add(acc, K.mul(a, b))
    return acc


def identity(K, n):
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def kernel(K, M, ncols=None):
    """Basis of ``{x : M x = 0}`` (rows of the returned list)."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots = rref(K, M, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [K.zero] * ncols
        x[f] = K.one
        for row, p in zip(R, pivots):
            x[p] = K.neg(row[f])
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Solution:
    """Result of :func:`solve_affine`.

    ``kind`` is ``"unique"``, ``"family"`` or ``"none"``.  For ``"family"``
    the solution set is ``particular + span(kernel)``.
    """

    kind: str
    particular: tuple | None = None
    kernel: tuple = ()

    @property
    def is_unique(self):
        return self.kind == "unique"


def solve_affine(K, M, b, ncols=None) -> Solution:
    """Solve ``M x = b`` exactly by Gauss-Jordan elimination."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if len(M) != len(b):
        raise InvalidInputError(f"{len(M)} equations but {len(b)} right-hand sides")
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(K, aug, ncols + 1)
    if ncols in pivots:
        return Solution("none")
    x = [K.zero] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    ker = tuple(kernel(K, M, ncols)) if len(pivots) < ncols else ()
    return Solution("family" if ker else "unique", tuple(x), ker)


def det(K, M):
    n = len(M)
    A = [list(r) for r in M]
    d = K.one
    for c in range(n):
        p = next((i for i in range(c, n) if not K.is_zero(A[i][c])), None)
        if p is None:
            return K.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = K.neg(d)
        piv = A[c][c]
        d = K.mul(d, piv)
        inv = K.inv(piv)
        for i in range(c + 1, n):
            f = K.mul(A[i][c], inv)
            if K.is_zero(f):
                continue
            A[i] = [K.sub(A[i][j], K.mul(f, A[c][j])) for j in range(n)]
    return d


def inverse(K, M):
    n = len(M)
    aug = [list(row) + list(e) for row, e in zip(M, identity(K, n))]
    R, pivots = rref(K, aug, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        raise InvalidInputError("matrix is singular")
    return [list(row[n:]) for row in R]


def charpoly(K, M):
    """Characteristic polynomial ``det(xI - M)``, lowest degree first.

    Berkowitz's algorithm: division free, valid over any commutative ring.
    """
    n = len(M)
    if n == 0:
        return [K.one]
    C = [K.one, K.neg(M[0][0])]  # highest degree first
    for r in range(1, n):
        A = [row[:r] for row in M[:r]]
        S = [M[i][r] for i in range(r)]
        R = M[r][:r]
        col = [K.one, K.neg(M[r][r])]
        v = S
        for _ in range(r):
            col.append(K.neg(_dot(K, R, v)))
            v = mat_vec(K, A, v)
        new = []
        for i in range(r + 2):
            acc = K.zero
            for j in range(min(i, r) + 1):
                acc = K.add(acc, K.mul(col[i - j], C[j]))
            new.append(acc)
        C = new
    return C[::-1]


class Subspace:
    """Subspace of ``K^ambient`` stored by its RREF basis.

    The RREF is unique, so equality and hashing are value based and
    ``sort_key`` orders subspaces deterministically.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient: int, vectors=()):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise InvalidInputError(f"vector of length {len(v)} in ambient dimension {ambient}")
        rows, pivots = rref(field, vectors, ambient) if vectors else ([], ())
        self.field = field
        self.ambient = ambient
        self.rows = tuple(rows)
        self.pivots = pivots

    @classmethod
    def from_rref(cls, field, ambient, rows):
        """Trusted constructor for rows already in RREF."""
        obj = cls.__new__(cls)
        obj.field = field
        obj.ambient = ambient
        obj.rows = tuple(tuple(r) for r in rows)
        obj.pivots = tuple(next(i for i, x in enumerate(r) if not field.is_zero(x)) for r in obj.rows)
        return obj

    @property
    def dim(self) -> int:
        return len(self.rows)

    def residual(self, v):
        K = self.field
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if K.is_zero(c):
                continue
            for j in range(p, self.ambient):
                if not K.is_zero(row[j]):
                    w[j] = K.sub(w[j], K.mul(c, row[j]))
        return w

    def contains(self, v) -> bool:
        K = self.field
        return all(K.is_zero(x) for x in self.residual(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v):
        """Coefficients of ``v`` in the RREF basis (read off at the pivots)."""
        if not self.contains(v):
            raise InvalidInputError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coeffs):
        K = self.field
        out = [K.zero] * self.ambient
        for c, row in zip(coeffs, self.rows):
            if K.is_zero(c):
                continue
            for j, x in enumerate(row):
                out[j] = K.add(out[j], K.mul(c, x))
        return tuple(out)

    def __add__(self, other):
        self._same_space(other)
        return Subspace(self.field, self.ambient, self.rows + other.rows)

    def intersection(self, other):
        self._same_space(other)
        K = self.field
        # x in self, x in other  <=>  a.rows_self = b.rows_other
        M = transpose([list(r) for r in self.rows] + [[K.neg(x) for x in r] for r in other.rows])
        if not M:
            return Subspace(K, self.ambient)
        ker = kernel(K, M, self.dim + other.dim)
        return Subspace(K, self.ambient, [self.combine(k[: self.dim]) for k in ker])

    def _same_space(self, other):
        if other.field != self.field or other.ambient != self.ambient:
            raise InvalidInputError("subspaces live in different spaces")

    def map(self, fn, field):
        """Apply a coordinatewise field map (embedding or automorphism).

        Field homomorphisms fix 0 and 1, so the image of an RREF is an RREF.
        """
        return Subspace.from_rref(field, self.ambient, [tuple(fn(x) for x in r) for r in self.rows])

    def over(self, K):
        if K == self.field:
            return self
        F = self.field
        return self.map(lambda x: K.coerce(x, F), K)

    def descend(self, F):
        """The same subspace over subfield ``F`` if its RREF is ``F``-rational, else None."""
        K = self.field
        rows = []
        for r in self.rows:
            row = []
            for x in r:
                y = K.descend(x, F)
                if y is None:
                    return None
                row.append(y)
            rows.append(tuple(row))
        return Subspace.from_rref(F, self.ambient, rows)

    def sort_key(self):
        return (self.dim, self.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.ambient == self.ambient
                and other.field == self.field and other.rows == self.rows)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, rows={list(self.rows)})"


def direct_sum_check(subspaces, ambient_dim: int) -> bool:
    """True iff the subspaces are independent and together fill the ambient space."""
    subspaces = list(subspaces)
    total = sum(s.dim for s in subspaces)
    if total != ambient_dim:
        return False
    if not subspaces:
        return ambient_dim == 0
    K = subspaces[0].field
    rows = [r for s in subspaces for r in s.rows]
    return rank(K, rows) == total


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def iter_rref(K, n: int, k: int):
    """Every ``k``-dimensional subspace of ``K^n`` as RREF rows, in canonical order.

    Order: pivot tuples lexicographically, then free entries lexicographically
    in ``K.elements()`` order.
    """
    elems = list(K.elements())
    for pivots in itertools.combinations(range(n), k):
        pivset = set(pivots)
        slots = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivset]
        for values in itertools.product(elems, repeat=len(slots)):
            rows = [[K.zero] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = K.one
            for (i, j), x in zip(slots, values):
                rows[i][j] = x
            yield tuple(tuple(r) for r in rows)
