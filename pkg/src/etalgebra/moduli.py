"""Point-level moduli maps between generators, etale subalgebras and ideal tuples.

* :func:`lagrange_idempotents` splits ``k(a)`` into its primitive idempotents.
* :func:`psi` sends an element with separable full-degree minimal polynomial
  to the subalgebra it generates; :func:`phi` is its inverse on the slice
  ``L + a`` fixed by a :class:`PsiConfig`.
* :class:`IdealSystem` holds a tuple of right ideals with ``A = I_1 + ... + I_l``
  direct; :func:`subalgebra_from_ideal_system` and
  :func:`ideal_system_from_subalgebra` are mutually inverse.
"""

from __future__ import annotations

from . import linalg
from .algebra import Element, Partition, RightIdeal, ideal_from_idempotent, min_poly, reduced_rank
from .errors import (BoundaryError, InvalidInputError, NotInUError, StructuralError,
                     TransversalityError)
from .etale import EtaleSubalgebra, minimal_idempotents
from .linalg import Subspace, direct_sum_check
from .poly import squarefree_test


def lagrange_idempotents(a: Element, roots, field=None):
    """``e_i = prod_{j != i} (a - r_j) / (r_i - r_j)`` in ``A (x) field``.

    ``roots`` must be exactly the roots of ``min_poly(a)``, pairwise distinct.
    """
    K = field or a.algebra.field
    roots = list(roots)
    if len(set(roots)) != len(roots):
        raise InvalidInputError("repeated roots")
    f = min_poly(a)
    if len(roots) != f.degree:
        raise InvalidInputError(f"{len(roots)} roots given for a minimal polynomial of degree {f.degree}")
    fK = f.over(K)
    for r in roots:
        if not K.is_zero(fK(r)):
            raise InvalidInputError(f"{K.format(r)} is not a root of the minimal polynomial")
    aK = a.over(K)
    A = aK.algebra
    shifted = [aK - A.scalar(r) for r in roots]
    out = []
    for i, ri in enumerate(roots):
        e = A.one
        for j, rj in enumerate(roots):
            if j != i:
                e = e * shifted[j].scale(K.inv(K.sub(ri, rj)))
        out.append(e)
    return out


def in_U(a: Element) -> bool:
    """Minimal polynomial squarefree of degree ``deg(A)``."""
    n = a.algebra.degree
    if n is None:
        raise StructuralError("algebra has no degree certificate")
    f = min_poly(a)
    return f.degree == n and squarefree_test(f)


def psi(a: Element) -> EtaleSubalgebra:
    """The (maximal etale) subalgebra ``F[a]`` generated by ``a``."""
    if not in_U(a):
        raise NotInUError("minimal polynomial is not squarefree of full degree")
    A = a.algebra
    powers = [A.one]
    for _ in range(A.degree - 1):
        powers.append(powers[-1] * a)
    E = EtaleSubalgebra.span(A, powers)
    E._primitive = a
    return E


def underlying_subspace(E: EtaleSubalgebra) -> Subspace:
    return E.subspace


class PsiConfig:
    """A maximal etale ``E``, a generator ``a`` of ``E`` in ``U``, and a complement ``L``."""

    def __init__(self, E: EtaleSubalgebra, a: Element, L: Subspace):
        A = E.algebra
        n = A.degree
        if a.algebra is not A:
            raise InvalidInputError("generator is not in the algebra of E")
        if a not in E:
            raise InvalidInputError("generator does not lie in E")
        if not in_U(a):
            raise NotInUError("generator is not in U")
        if E.dim != n:
            raise InvalidInputError(f"E has dimension {E.dim}, not {n}")
        if L.dim != A.dim - n or not direct_sum_check([E.subspace, L], A.dim):
            raise InvalidInputError("L is not a complement of E")
        self.E, self.a, self.L = E, a, L

    @property
    def algebra(self):
        return self.E.algebra

    @classmethod
    def default(cls, E: EtaleSubalgebra, a: Element | None = None):
        """Complement spanned by the basis vectors at the non-pivot columns of ``E``."""
        from .etale import primitive_element

        A = E.algebra
        if a is None:
            a = primitive_element(E)
        piv = set(E.subspace.pivots)
        L = Subspace(A.field, A.dim, [A.basis_coords(j) for j in range(A.dim) if j not in piv])
        return cls(E, a, L)


def phi(E2: EtaleSubalgebra, cfg: PsiConfig) -> Element:
    """The unique ``b`` in ``E2`` with ``b - a`` in ``L``."""
    A = cfg.algebra
    if E2.algebra is not A:
        raise InvalidInputError("subalgebra is not in the configured algebra")
    if E2.dim != A.degree:
        raise InvalidInputError(f"subalgebra has dimension {E2.dim}, not {A.degree}")
    K = A.field
    cols = list(E2.subspace.rows) + [tuple(K.neg(x) for x in r) for r in cfg.L.rows]
    sol = linalg.solve_affine(K, linalg.transpose(cols), list(cfg.a.coords), ncols=len(cols))
    if not sol.is_unique:
        raise TransversalityError("subalgebra meets L nontrivially")
    b = Element(A, E2.subspace.combine(sol.particular[: E2.dim]))
    if not in_U(b):
        raise BoundaryError("E2 meets L + a outside U")
    return b


class IdealSystem:
    """Right ideals ``I_1, ..., I_l`` with ``A`` their direct sum, and ``1 = sum e_i``.

    Ideals are kept in canonical order (reduced rank descending, then RREF),
    so two systems are equal exactly when they agree up to reordering.
    """

    def __init__(self, ideals):
        ideals = list(ideals)
        if not ideals:
            raise InvalidInputError("empty ideal system")
        A = ideals[0].algebra
        if any(I.algebra is not A for I in ideals):
            raise InvalidInputError("ideals live in different algebras")
        if not direct_sum_check([I.subspace for I in ideals], A.dim):
            raise InvalidInputError("ideals do not form a direct sum decomposition of A")
        key = (lambda I: (-I.dim, I.subspace.rows))
        ideals.sort(key=key)
        K = A.field
        cols = [r for I in ideals for r in I.subspace.rows]
        sol = linalg.solve_affine(K, linalg.transpose(cols), list(A.one_coords), ncols=len(cols))
        assert sol.is_unique
        idems, pos = [], 0
        for I in ideals:
            idems.append(Element(A, I.subspace.combine(sol.particular[pos: pos + I.dim])))
            pos += I.dim
        self.algebra = A
        self.ideals = tuple(ideals)
        self.idempotents = tuple(idems)
        self._check()

    def _check(self):
        A = self.algebra
        for i, e in enumerate(self.idempotents):
            for j, f in enumerate(self.idempotents):
                expect = e if i == j else A.zero
                if e * f != expect:
                    raise StructuralError("idempotents are not orthogonal")
            if ideal_from_idempotent(e).subspace != self.ideals[i].subspace:
                raise StructuralError("ideal is not generated by its idempotent")

    @classmethod
    def from_idempotents(cls, idempotents):
        return cls(ideal_from_idempotent(e) for e in idempotents)

    @property
    def field(self):
        return self.algebra.field

    @property
    def ranks(self) -> Partition:
        return Partition(reduced_rank(I) for I in self.ideals)

    def __len__(self):
        return len(self.ideals)

    def map(self, hom):
        return IdealSystem(I.map(hom) for I in self.ideals)

    def apply(self, fn):
        """Image under a coordinatewise automorphism ``fn`` of the field."""
        A, K = self.algebra, self.field
        return IdealSystem(RightIdeal(A, I.subspace.map(fn, K), check=False) for I in self.ideals)

    def is_stable(self, fn) -> bool:
        """True when ``fn`` (applied to coordinates) permutes the idempotents."""
        mine = {e.coords for e in self.idempotents}
        return {tuple(fn(c) for c in e.coords) for e in self.idempotents} == mine

    def key(self):
        return tuple(I.subspace.rows for I in self.ideals)

    def __eq__(self, other):
        return (isinstance(other, IdealSystem) and other.algebra is self.algebra
                and other.key() == self.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"IdealSystem(ranks={list(self.ranks)}, field={self.field!r})"


def subalgebra_from_ideal_system(system: IdealSystem) -> EtaleSubalgebra:
    """``E = span(e_1, ..., e_l)``."""
    return EtaleSubalgebra.span(system.algebra, system.idempotents)


def ideal_system_from_subalgebra(E: EtaleSubalgebra) -> IdealSystem:
    """``(e_i A)`` over the splitting field of ``E``."""
    _, idems = minimal_idempotents(E)
    return IdealSystem.from_idempotents(idems)
