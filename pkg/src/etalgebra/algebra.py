"""Finite-dimensional associative algebras by structure constants.

An :class:`Algebra` over a field ``F`` of dimension ``d`` is given by the
products of basis vectors ``b_i * b_j = sum_k c[i][j][k] b_k`` and the
coordinates of its unity.  Central simple algebras carry a *degree
certificate* ``n`` with ``d = n*n``; it is supplied by the constructors and
never inferred.
"""

from __future__ import annotations

import itertools
from collections import Counter

from . import linalg
from .errors import CharacteristicError, InvalidInputError, StructuralError
from .fields import Field, load_field
from .linalg import Subspace
from .poly import Poly


class Algebra:
    def __init__(self, field: Field, table, one, degree: int | None = None,
                 descriptor: dict | None = None, check: bool = True, sparse: bool = False,
                 _root=None):
        d = len(table)
        self.field = field
        self.dim = d
        self.degree = degree
        self.descriptor = descriptor
        self.one_coords = tuple(one)
        if len(self.one_coords) != d:
            raise InvalidInputError("unity has the wrong length")
        # sparse products: _mul[i][j] = ((k, c), ...)
        if sparse:
            self._mul = table
        else:
            self._mul = tuple(
                tuple(tuple((k, c) for k, c in enumerate(table[i][j]) if not field.is_zero(c))
                      for j in range(d))
                for i in range(d))
        self._root = _root or self
        self._over = {} if _root is None else None
        if degree is not None and degree * degree != d:
            raise StructuralError(f"degree {degree} is incompatible with dimension {d}")
        if check:
            self._check_unity()
            self._check_associative()

    # -- construction checks -------------------------------------------------

    def _check_unity(self):
        one = self.one_coords
        for i in range(self.dim):
            b = self.basis_coords(i)
            if self.mul_coords(one, b) != b or self.mul_coords(b, one) != b:
                raise InvalidInputError(f"unity is not a two-sided identity on basis element {i}")

    def _check_associative(self):
        d = self.dim
        basis = [self.basis_coords(i) for i in range(d)]
        prods = [[self.mul_coords(basis[i], basis[j]) for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if self.mul_coords(prods[i][j], basis[k]) != self.mul_coords(basis[i], prods[j][k]):
                        raise InvalidInputError(f"structure constants are not associative at {(i, j, k)}")

    # -- raw coordinate arithmetic ------------------------------------------

    def basis_coords(self, i):
        K = self.field
        return tuple(K.one if j == i else K.zero for j in range(self.dim))

    def zero_coords(self):
        return (self.field.zero,) * self.dim

    def mul_coords(self, u, v):
        K = self.field
        out = [K.zero] * self.dim
        one = K.one
        table = self._mul
        nz_v = [(j, y) for j, y in enumerate(v) if not K.is_zero(y)]
        for i, x in enumerate(u):
            if K.is_zero(x):
                continue
            row = table[i]
            for j, y in nz_v:
                c = K.mul(x, y)
                for k, s in row[j]:
                    out[k] = K.add(out[k], c if s == one else K.mul(c, s))
        return tuple(out)

    def add_coords(self, u, v):
        K = self.field
        return tuple(K.add(a, b) for a, b in zip(u, v))

    def sub_coords(self, u, v):
        K = self.field
        return tuple(K.sub(a, b) for a, b in zip(u, v))

    def scale_coords(self, c, u):
        K = self.field
        return tuple(K.mul(c, a) for a in u)

    # -- elements ------------------------------------------------------------

    def __call__(self, coords):
        return self.element(coords)

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise InvalidInputError(f"element needs {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def load_element(self, obj):
        if not isinstance(obj, (list, tuple)):
            raise InvalidInputError(f"element must be a coordinate list, got {obj!r}")
        return self.element(self.field.load(c) for c in obj)

    @property
    def one(self):
        return Element(self, self.one_coords)

    @property
    def zero(self):
        return Element(self, self.zero_coords())

    def basis(self):
        return [Element(self, self.basis_coords(i)) for i in range(self.dim)]

    def scalar(self, c):
        return Element(self, self.scale_coords(c, self.one_coords))

    def elements(self):
        """Every element (finite base field only), in lexicographic coordinate order."""
        for coords in itertools.product(list(self.field.elements()), repeat=self.dim):
            yield Element(self, coords)

    def left_matrix(self, u):
        """Matrix of ``x -> u*x`` in the basis (columns are images of basis vectors)."""
        cols = [self.mul_coords(u, self.basis_coords(j)) for j in range(self.dim)]
        return linalg.transpose(cols)

    # -- base change ---------------------------------------------------------

    @property
    def root(self) -> "Algebra":
        return self._root

    def over(self, K: Field) -> "Algebra":
        """``A (x) K`` for an extension ``K`` of the root algebra's field; cached."""
        if K == self.field:
            return self
        root = self._root
        if K == root.field:
            return root
        if K not in root._over:
            F = root.field
            if not K.extends(F):
                raise InvalidInputError(f"{K!r} does not extend {F!r}")
            table = tuple(tuple(tuple((k, K.coerce(c, F)) for k, c in entry) for entry in row)
                          for row in root._mul)
            root._over[K] = Algebra(K, table, [K.coerce(c, F) for c in root.one_coords],
                                    degree=root.degree, descriptor=root.descriptor,
                                    check=False, sparse=True, _root=root)
        return root._over[K]

    @property
    def matrix_size(self):
        """``n`` when this is (a base change of) ``M_n`` in the row-major basis."""
        desc = self._root.descriptor or {}
        return desc.get("n") if desc.get("kind") == "matrix" else None

    def __repr__(self):
        desc = self.descriptor or {}
        kind = desc.get("kind", "algebra")
        return f"<{kind} algebra of dim {self.dim} over {self.field!r}>"


class Element:
    """An element of an :class:`Algebra`; immutable, hashable."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _other(self, other):
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise InvalidInputError("elements of different algebras")
            return other.coords
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, self.algebra.add_coords(self.coords, o))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, self.algebra.sub_coords(self.coords, o))

    def __neg__(self):
        K = self.algebra.field
        return Element(self.algebra, tuple(K.neg(c) for c in self.coords))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Element(self.algebra, self.algebra.mul_coords(self.coords, o))

    def scale(self, c):
        return Element(self.algebra, self.algebra.scale_coords(c, self.coords))

    def __pow__(self, k: int):
        result = self.algebra.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self):
        K = self.algebra.field
        return all(K.is_zero(c) for c in self.coords)

    def over(self, K):
        A = self.algebra.over(K)
        F = self.algebra.field
        return Element(A, tuple(K.coerce(c, F) for c in self.coords))

    def map(self, hom):
        """Image under a field embedding of the coordinates."""
        A = self.algebra.root.over(hom.target)
        return Element(A, hom.vector(self.coords))

    def dump(self):
        F = self.algebra.field
        return [F.dump(c) for c in self.coords]

    def __eq__(self, other):
        return (isinstance(other, Element) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        F = self.algebra.field
        return f"Element([{', '.join(F.format(c) for c in self.coords)}])"


class RightIdeal:
    """A subspace of ``A`` closed under right multiplication by ``A``."""

    __slots__ = ("algebra", "subspace")

    def __init__(self, algebra: Algebra, subspace: Subspace, check: bool = True):
        if subspace.field != algebra.field or subspace.ambient != algebra.dim:
            raise InvalidInputError("subspace does not live in the algebra")
        if check:
            for row in subspace.rows:
                for j in range(algebra.dim):
                    if not subspace.contains(algebra.mul_coords(row, algebra.basis_coords(j))):
                        raise InvalidInputError("subspace is not closed under right multiplication")
        self.algebra = algebra
        self.subspace = subspace

    @classmethod
    def span(cls, algebra, elements, check=True):
        return cls(algebra, Subspace(algebra.field, algebra.dim, [e.coords for e in elements]), check)

    @property
    def dim(self):
        return self.subspace.dim

    def basis(self):
        return [Element(self.algebra, r) for r in self.subspace.rows]

    def map(self, hom):
        A = self.algebra.root.over(hom.target)
        return RightIdeal(A, self.subspace.map(hom, hom.target), check=False)

    def __eq__(self, other):
        return isinstance(other, RightIdeal) and other.algebra is self.algebra and other.subspace == self.subspace

    def __hash__(self):
        return hash(self.subspace)

    def __repr__(self):
        return f"RightIdeal(dim={self.dim}, rows={list(self.subspace.rows)})"


class Partition:
    """A partition ``[n_1, ..., n_m]`` stored in descending order."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise InvalidInputError(f"partition entries must be positive: {parts}")
        self.parts = parts

    @classmethod
    def parse(cls, text: str):
        try:
            return cls(int(t) for t in text.replace(" ", "").strip("[]").split(",") if t)
        except ValueError:
            raise InvalidInputError(f"bad partition {text!r}") from None

    def multiplicity(self, i: int) -> int:
        """How often ``i`` occurs."""
        return self.parts.count(i)

    @property
    def distinct(self):
        """The set of distinct parts, ascending."""
        return tuple(sorted(set(self.parts)))

    @property
    def n_distinct(self) -> int:
        return len(set(self.parts))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicities(self):
        return Counter(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return other.parts == self.parts
        if isinstance(other, (list, tuple)):
            return self.parts == tuple(sorted(other, reverse=True))
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


# -- constructors -------------------------------------------------------------

def make_matrix_algebra(n: int, F: Field) -> Algebra:
    """``M_n(F)`` with basis ``e_ij`` in row-major order (index ``i*n + j``)."""
    if n < 1:
        raise InvalidInputError("matrix size must be positive")
    d = n * n
    one = F.one
    table = [[() for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for ll in range(n):
                # e_ij * e_jl = e_il
                table[i * n + j][j * n + ll] = ((i * n + ll, one),)
    table = tuple(tuple(row) for row in table)
    unity = [one if i % (n + 1) == 0 else F.zero for i in range(d)]
    return Algebra(F, table, unity, degree=n,
                   descriptor={"kind": "matrix", "n": n, "field": F.describe()},
                   check=n <= 4, sparse=True)


def make_quaternion_algebra(alpha, beta, F: Field) -> Algebra:
    """``(alpha, beta)_F`` with basis 1, i, j, k: i^2 = alpha, j^2 = beta, ij = k = -ji."""
    if F.characteristic == 2:
        raise CharacteristicError("quaternion algebras need characteristic != 2")
    if F.is_zero(alpha) or F.is_zero(beta):
        raise InvalidInputError("quaternion parameters must be nonzero")
    o, z = F.one, F.zero
    a, b = alpha, beta
    ab = F.mul(a, b)

    def vec(*pairs):
        v = [z] * 4
        for k, c in pairs:
            v[k] = c
        return v

    t = [[None] * 4 for _ in range(4)]
    for k in range(4):
        t[0][k] = vec((k, o))
        t[k][0] = vec((k, o))
    t[1][1] = vec((0, a))
    t[1][2] = vec((3, o))
    t[1][3] = vec((2, a))
    t[2][1] = vec((3, F.neg(o)))
    t[2][2] = vec((0, b))
    t[2][3] = vec((1, F.neg(b)))
    t[3][1] = vec((2, F.neg(a)))
    t[3][2] = vec((1, b))
    t[3][3] = vec((0, F.neg(ab)))
    return Algebra(F, t, vec((0, o)), degree=2,
                   descriptor={"kind": "quaternion", "a": F.dump(a), "b": F.dump(b),
                               "field": F.describe()})


def make_structure_constant_algebra(F: Field, table, one, degree=None) -> Algebra:
    d = len(table)
    if any(len(row) != d or any(len(e) != d for e in row) for row in table):
        raise InvalidInputError("structure table must be dim x dim x dim")
    return Algebra(F, table, one, degree=degree,
                   descriptor={"kind": "structure_constants", "dim": d,
                               "table": [[[F.dump(c) for c in e] for e in row] for row in table],
                               "one": [F.dump(c) for c in one], "degree": degree,
                               "field": F.describe()})


def load_algebra(desc: dict) -> Algebra:
    """Build an algebra from its JSON descriptor."""
    if not isinstance(desc, dict) or "kind" not in desc:
        raise InvalidInputError("algebra descriptor must be an object with a 'kind'")
    F = load_field(desc.get("field", "QQ"))
    kind = desc["kind"]
    try:
        if kind == "matrix":
            return make_matrix_algebra(int(desc["n"]), F)
        if kind == "quaternion":
            return make_quaternion_algebra(F.load(desc["a"]), F.load(desc["b"]), F)
        if kind == "structure_constants":
            table = [[[F.load(c) for c in e] for e in row] for row in desc["table"]]
            one = [F.load(c) for c in desc["one"]]
            if "dim" in desc and int(desc["dim"]) != len(table):
                raise InvalidInputError("'dim' disagrees with the table")
            deg = desc.get("degree")
            return make_structure_constant_algebra(F, table, one, None if deg is None else int(deg))
    except KeyError as exc:
        raise InvalidInputError(f"algebra descriptor missing {exc}") from None
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad algebra descriptor: {exc}") from None
    raise InvalidInputError(f"unknown algebra kind {kind!r}")


# -- operations -----------------------------------------------------------------

def min_poly(a: Element) -> Poly:
    """Monic generator of the kernel of ``F[x] -> A, x -> a``."""
    A = a.algebra
    K = A.field
    powers = [A.one_coords]
    while True:
        nxt = A.mul_coords(powers[-1], a.coords)
        M = linalg.transpose([list(p) for p in powers])
        sol = linalg.solve_affine(K, M, list(nxt), ncols=len(powers))
        if sol.kind != "none":
            # powers are independent, so the solution is unique
            coeffs = [K.neg(c) for c in sol.particular] + [K.one]
            return Poly(coeffs, K)
        powers.append(nxt)


def charpoly_left(a: Element) -> Poly:
    """Characteristic polynomial of left multiplication by ``a`` on ``A``."""
    A = a.algebra
    return Poly(linalg.charpoly(A.field, A.left_matrix(a.coords)), A.field)


def is_idempotent(e: Element) -> bool:
    return e * e == e


def ideal_from_idempotent(e: Element) -> RightIdeal:
    """The right ideal ``eA``."""
    if not is_idempotent(e):
        raise InvalidInputError("element is not idempotent")
    A = e.algebra
    return RightIdeal(A, Subspace(A.field, A.dim, [A.mul_coords(e.coords, A.basis_coords(j))
                                                    for j in range(A.dim)]), check=False)


def reduced_rank(ideal: RightIdeal) -> int:
    """``dim(I) / deg(A)``."""
    n = ideal.algebra.degree
    if n is None:
        raise StructuralError("algebra has no degree certificate")
    if ideal.dim % n:
        raise StructuralError(f"ideal of dimension {ideal.dim} is not a summand of a degree-{n} algebra")
    return ideal.dim // n


def summand_generator(ideal: RightIdeal):
    """An idempotent ``e`` in ``I`` acting as a left identity on ``I``, or None.

    Solves ``e = sum x_k v_k`` with ``e * v_j = v_j`` for every basis vector
    ``v_j``; any solution satisfies ``eA = I``.
    """
    A = ideal.algebra
    K = A.field
    basis = ideal.subspace.rows
    if not basis:
        return A.zero
    m = len(basis)
    prods = [[A.mul_coords(vk, vj) for vk in basis] for vj in basis]
    M, rhs = [], []
    for j, vj in enumerate(basis):
        for c in range(A.dim):
            M.append([prods[j][k][c] for k in range(m)])
            rhs.append(vj[c])
    sol = linalg.solve_affine(K, M, rhs, ncols=m)
    if sol.kind == "none":
        return None
    return Element(A, ideal.subspace.combine(sol.particular))
