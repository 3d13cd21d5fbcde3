"""Etale subalgebras: recognition, primitive elements, minimal idempotents, type."""

from __future__ import annotations

import itertools

from . import linalg
from .algebra import Algebra, Element, Partition, ideal_from_idempotent, min_poly, reduced_rank
from .errors import ExhaustionError, InvalidInputError, UnsupportedError
from .linalg import Subspace
from .poly import finite_extension, is_irreducible, splitting_extension

#: finite subalgebras with at most this many elements are searched exhaustively
EXHAUSTIVE_ELEMENT_LIMIT = 2**16
#: largest degree of the auxiliary extension tried when no primitive element exists
MAX_SCALAR_EXTENSION = 8


def _structure(A: Algebra, V: Subspace):
    """Products of basis vectors of ``V``, or None if ``V`` is not closed."""
    rows = V.rows
    out = []
    for x in rows:
        line = []
        for y in rows:
            p = A.mul_coords(x, y)
            if not V.contains(p):
                return None
            line.append(p)
        out.append(line)
    return out


def _trace_form(A: Algebra, V: Subspace, prods):
    """Gram matrix of ``(x, y) -> Tr_V(L_{xy})`` on the RREF basis of ``V``."""
    K = A.field
    m = V.dim
    # structure constants of V in its own basis: coordinates read at the pivots
    gamma = [[V.coordinates(prods[i][j]) for j in range(m)] for i in range(m)]
    tr = [K.zero] * m
    for ll in range(m):
        acc = K.zero
        for k in range(m):
            acc = K.add(acc, gamma[ll][k][k])
        tr[ll] = acc
    return [[linalg._dot(K, gamma[i][j], tr) for j in range(m)] for i in range(m)]


def is_etale_subalgebra(V: Subspace, A: Algebra) -> bool:
    """Unital, closed, commutative, with nondegenerate trace form."""
    if V.field != A.field or V.ambient != A.dim:
        raise InvalidInputError("subspace does not live in the algebra")
    if not V.contains(A.one_coords):
        return False
    prods = _structure(A, V)
    if prods is None:
        return False
    m = V.dim
    for i in range(m):
        for j in range(i + 1, m):
            if prods[i][j] != prods[j][i]:
                return False
    gram = _trace_form(A, V, prods)
    return linalg.rank(A.field, gram) == m


class EtaleSubalgebra:
    """A commutative separable unital subalgebra of ``A``.

    Equality is equality of the underlying subspaces inside the same algebra.
    The primitive element, idempotents and type are cached on first use.
    """

    def __init__(self, algebra: Algebra, subspace: Subspace, check: bool = True):
        if check and not is_etale_subalgebra(subspace, algebra):
            raise InvalidInputError("subspace is not an etale subalgebra")
        self.algebra = algebra
        self.subspace = subspace
        self._primitive = None
        self._idempotents = None
        self._type = None

    @classmethod
    def span(cls, algebra: Algebra, elements, check=True):
        vecs = [e.coords if isinstance(e, Element) else tuple(e) for e in elements]
        return cls(algebra, Subspace(algebra.field, algebra.dim, vecs), check)

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.subspace.dim

    def basis(self):
        return [Element(self.algebra, r) for r in self.subspace.rows]

    def __contains__(self, x: Element):
        return self.subspace.contains(x.coords)

    def elements(self):
        for c in itertools.product(list(self.field.elements()), repeat=self.dim):
            yield Element(self.algebra, self.subspace.combine(c))

    def over(self, K):
        return EtaleSubalgebra(self.algebra.over(K), self.subspace.over(K), check=False)

    def map(self, hom):
        return EtaleSubalgebra(self.algebra.root.over(hom.target), self.subspace.map(hom, hom.target),
                               check=False)

    def descend(self, F):
        """The subalgebra over subfield ``F`` if it is defined there, else None."""
        V = self.subspace.descend(F)
        if V is None:
            return None
        return EtaleSubalgebra(self.algebra.root.over(F), V, check=False)

    def __eq__(self, other):
        return (isinstance(other, EtaleSubalgebra) and other.algebra is self.algebra
                and other.subspace == self.subspace)

    def __hash__(self):
        return hash(self.subspace)

    def __repr__(self):
        return f"EtaleSubalgebra(dim={self.dim}, rows={list(self.subspace.rows)})"

    # conveniences over the module functions
    @property
    def primitive_element(self):
        return primitive_element(self)

    @property
    def type(self):
        return type_of(self)


def _is_generator(a: Element, m: int) -> bool:
    return min_poly(a).degree == m


def _candidates(E: EtaleSubalgebra):
    A = E.algebra
    K = A.field
    rows = E.subspace.rows
    m = len(rows)
    for r in rows:
        yield r
    for c in K.nonzero_scalars(8):
        for i in range(m):
            for j in range(i + 1, m):
                yield A.add_coords(rows[i], A.scale_coords(c, rows[j]))
    if not K.is_finite:
        # sum c^i x_i is primitive for all but finitely many c
        bound = m * m * (m - 1) // 2 + 2
        for t in range(2, bound + 2):
            c = K.from_int(t)
            yield E.subspace.combine([K.pow(c, i) for i in range(m)])


def primitive_element(E: EtaleSubalgebra) -> Element:
    """An element generating ``E`` as an algebra (deterministic search)."""
    if E._primitive is not None:
        return E._primitive
    A, K, m = E.algebra, E.field, E.dim
    for v in _candidates(E):
        a = Element(A, v)
        if _is_generator(a, m):
            E._primitive = a
            return a
    if K.is_finite:
        if K.order ** m > EXHAUSTIVE_ELEMENT_LIMIT:
            raise ExhaustionError("no primitive element within the search budget")
        for a in E.elements():
            if _is_generator(a, m):
                E._primitive = a
                return a
        raise ExhaustionError(f"{E!r} has no primitive element over {K!r}", exhaustive=True)
    raise ExhaustionError("no primitive element found")


def _generator_after_extension(E: EtaleSubalgebra):
    """Primitive element of ``E`` or, over tiny finite fields, of ``E (x) F_{q^k}``."""
    try:
        return E, primitive_element(E)
    except ExhaustionError:
        if not E.field.is_finite:
            raise
    for k in range(2, MAX_SCALAR_EXTENSION + 1):
        Ek = E.over(finite_extension(E.field, k))
        try:
            return Ek, primitive_element(Ek)
        except ExhaustionError:
            continue
    raise ExhaustionError(f"no primitive element for {E!r} up to degree {MAX_SCALAR_EXTENSION}")


def minimal_idempotents(E: EtaleSubalgebra):
    """``(K, [e_1, ..., e_m])``: the minimal idempotents of ``E (x) K`` over a splitting field.

    The idempotents live in ``A.over(K)`` and follow the canonical root order.
    """
    if E._idempotents is not None:
        return E._idempotents
    from .moduli import lagrange_idempotents

    _, a = _generator_after_extension(E)
    K, roots = splitting_extension(min_poly(a))
    idems = lagrange_idempotents(a, roots, K)
    E._idempotents = (K, idems)
    return E._idempotents


def type_of(E: EtaleSubalgebra) -> Partition:
    """Multiset of reduced ranks of the minimal idempotents."""
    if E._type is None:
        _, idems = minimal_idempotents(E)
        E._type = Partition(reduced_rank(ideal_from_idempotent(e)) for e in idems)
    return E._type


def is_subfield(E: EtaleSubalgebra) -> bool:
    """True iff ``E`` is a field, i.e. the minimal polynomial of a generator is irreducible."""
    if E.dim == 1:
        return True
    try:
        a = primitive_element(E)
    except ExhaustionError as exc:
        if exc.exhaustive:
            # every finite field extension has a primitive element
            return False
        raise UnsupportedError(str(exc)) from None
    return is_irreducible(min_poly(a))
