"""Plucker coordinates of 2-planes in a 4-space, quadrics, and line-quadric pairs.

Coordinates of a 2-vector are ordered ``(p12, p13, p14, p23, p24, p34)``.
The pairing ``<w1, w2>`` is the coefficient of ``e1^e2^e3^e4`` in ``w1^w2``;
a point is a 2-plane exactly when ``p12*p34 - p13*p24 + p14*p23 = 0``.

Only the split model is implemented: for ``A = M_4(F)`` a right ideal of
reduced rank 2 is identified with its column space, a point of Gr(2, 4).
Characteristic 2 is rejected throughout.
"""

from __future__ import annotations

from . import linalg
from .algebra import Algebra, RightIdeal
from .errors import (BoundaryError, CharacteristicError, InvalidInputError,
                     NotDecomposableError, StructuralError)
from .linalg import Subspace
from .poly import Poly, splitting_extension

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
#: (index, index, sign) with <w, w'> = sum sign * (w[i] w'[j] + w[j] w'[i])
_WEDGE_TERMS = ((0, 5, 1), (1, 4, -1), (2, 3, 1))


def _require_odd(F):
    if F.characteristic == 2:
        raise CharacteristicError("quadric geometry is not implemented in characteristic 2")


def _normalize(F, v):
    """Scale so that the first nonzero coordinate is one."""
    lead = next((c for c in v if not F.is_zero(c)), None)
    if lead is None:
        raise InvalidInputError("the zero vector is not a projective point")
    inv = F.inv(lead)
    return tuple(F.mul(inv, c) for c in v)


class PluckerPoint:
    """A point of P^5 in canonical form (first nonzero coordinate one)."""

    __slots__ = ("field", "coords")

    def __init__(self, coords, field):
        _require_odd(field)
        coords = tuple(coords)
        if len(coords) != 6:
            raise InvalidInputError("a Plucker point has six coordinates")
        self.field = field
        self.coords = _normalize(field, coords)

    def relation(self):
        return plucker_relation(self.field, self.coords)

    @property
    def is_decomposable(self):
        return self.field.is_zero(self.relation())

    def dump(self):
        return [self.field.dump(c) for c in self.coords]

    def __eq__(self, other):
        return isinstance(other, PluckerPoint) and other.field == self.field and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"PluckerPoint({[self.field.format(c) for c in self.coords]})"


def plucker_relation(F, p):
    return F.add(F.sub(F.mul(p[0], p[5]), F.mul(p[1], p[4])), F.mul(p[2], p[3]))


def wedge_minors(F, u, v):
    """Raw (unnormalized) coordinates of ``u ^ v``."""
    return tuple(F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i])) for i, j in PAIRS)


def plucker_embed(W: Subspace) -> PluckerPoint:
    F = W.field
    _require_odd(F)
    if W.ambient != 4 or W.dim != 2:
        raise InvalidInputError("plucker_embed needs a 2-plane in a 4-space")
    return PluckerPoint(wedge_minors(F, *W.rows), F)


def wedge_form(F, w1, w2):
    """Coefficient of ``e1^e2^e3^e4`` in ``w1 ^ w2``."""
    acc = F.zero
    for i, j, sign in _WEDGE_TERMS:
        t = F.add(F.mul(w1[i], w2[j]), F.mul(w1[j], w2[i]))
        acc = F.add(acc, t) if sign > 0 else F.sub(acc, t)
    return acc


def wedge_matrix(F):
    """Gram matrix of :func:`wedge_form` in the ordered basis ``e_ij``."""
    G = [[F.zero] * 6 for _ in range(6)]
    for i, j, sign in _WEDGE_TERMS:
        s = F.one if sign > 0 else F.neg(F.one)
        G[i][j] = G[j][i] = s
    return G


def wedge2_action(F, g, w):
    """``(wedge^2 g) w`` for a 4x4 matrix ``g`` acting on column vectors."""
    out = []
    for i, j in PAIRS:
        acc = F.zero
        for col, (k, ll) in enumerate(PAIRS):
            if F.is_zero(w[col]):
                continue
            minor = F.sub(F.mul(g[i][k], g[j][ll]), F.mul(g[i][ll], g[j][k]))
            acc = F.add(acc, F.mul(minor, w[col]))
        out.append(acc)
    return tuple(out)


def plucker_inverse(p: PluckerPoint) -> Subspace:
    """The 2-plane with Plucker point ``p``: the row space of the skew matrix of ``p``."""
    F = p.field
    if not p.is_decomposable:
        raise NotDecomposableError(f"Plucker relation gives {F.format(p.relation())}, not 0")
    P = [[F.zero] * 4 for _ in range(4)]
    for (i, j), c in zip(PAIRS, p.coords):
        P[i][j] = c
        P[j][i] = F.neg(c)
    W = Subspace(F, 4, P)
    assert W.dim == 2
    return W


class QuadraticSpace:
    """``(V, q)`` with ``q(x) = x^T G x`` for a symmetric Gram matrix ``G``.

    ``G`` is only meaningful up to similarity for the quadric it defines;
    :meth:`is_similar` compares spaces on that level.
    """

    def __init__(self, field, gram):
        _require_odd(field)
        gram = tuple(tuple(row) for row in gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise InvalidInputError("Gram matrix must be square")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise InvalidInputError("Gram matrix must be symmetric")
        self.field = field
        self.dim = n
        self.gram = gram

    @classmethod
    def from_form(cls, field, n, terms):
        """From ``{(i, j): c}`` meaning ``q = sum c * x_i * x_j`` (0-based indices)."""
        F = field
        _require_odd(F)
        half = F.inv(F.from_int(2))
        G = [[F.zero] * n for _ in range(n)]
        for (i, j), c in terms.items():
            if i == j:
                G[i][i] = F.add(G[i][i], c)
            else:
                h = F.mul(half, c)
                G[i][j] = F.add(G[i][j], h)
                G[j][i] = F.add(G[j][i], h)
        return cls(F, G)

    @property
    def is_nondegenerate(self):
        return not self.field.is_zero(linalg.det(self.field, self.gram))

    def bilinear(self, u, v):
        F = self.field
        return linalg._dot(F, u, linalg.mat_vec(F, self.gram, v))

    def value(self, v):
        return self.bilinear(v, v)

    def over(self, K):
        if K == self.field:
            return self
        F = self.field
        return QuadraticSpace(K, [[K.coerce(c, F) for c in row] for row in self.gram])

    def is_similar(self, other):
        """Gram matrices proportional by a nonzero scalar."""
        if other.field != self.field or other.dim != self.dim:
            return False
        F = self.field
        flat_a = [c for row in self.gram for c in row]
        flat_b = [c for row in other.gram for c in row]
        k = next((i for i, c in enumerate(flat_a) if not F.is_zero(c)), None)
        if k is None or F.is_zero(flat_b[k]):
            return False
        s = F.div(flat_b[k], flat_a[k])
        return all(F.mul(s, a) == b for a, b in zip(flat_a, flat_b))

    def dump(self):
        return [[self.field.dump(c) for c in row] for row in self.gram]

    def __eq__(self, other):
        return isinstance(other, QuadraticSpace) and other.field == self.field and other.gram == self.gram

    def __hash__(self):
        return hash(self.gram)


def split_form(F):
    """``x1*x4 - x2*x3`` on ``F^4``."""
    return QuadraticSpace.from_form(F, 4, {(0, 3): F.one, (1, 2): F.neg(F.one)})


def klein_quadric(F):
    """The quadric ``p12 p34 - p13 p24 + p14 p23`` on the Plucker space ``F^6``."""
    half = F.inv(F.from_int(2))
    return QuadraticSpace(F, [[F.mul(half, c) for c in row] for row in wedge_matrix(F)])


PAIR, TANGENT, CONTAINED = "pair", "tangent", "contained"


class PointPairOnQuadric:
    """An unordered pair of points of ``Q`` on a line, stored as (plane, binary form).

    ``form = (c0, c1, c2)`` is ``q(s*w1 + t*w2) = c0 s^2 + c1 s t + c2 t^2`` on
    the RREF basis ``w1, w2`` of the plane, scaled so its first nonzero
    coefficient is one.  ``kind`` is ``"pair"``, ``"tangent"`` (double root)
    or ``"contained"`` (the form vanishes).  Conjugate pairs stay representable
    over the base field.
    """

    def __init__(self, plane: Subspace, form, kind: str, quadric: QuadraticSpace):
        self.plane = plane
        self.form = tuple(form)
        self.kind = kind
        self.quadric = quadric

    @classmethod
    def from_points(cls, quadric: QuadraticSpace, points, field=None):
        """Pair from two distinct points of ``Q`` given over ``field`` (an extension)."""
        K = field or quadric.field
        qK = quadric.over(K)
        pts = [tuple(p) for p in points]
        if len(pts) != 2:
            raise InvalidInputError("a point pair needs two points")
        for p in pts:
            if not K.is_zero(qK.value(p)):
                raise InvalidInputError("point does not lie on the quadric")
        span = Subspace(K, quadric.dim, pts)
        if span.dim != 2:
            raise InvalidInputError("points coincide")
        plane = span.descend(quadric.field)
        if plane is None:
            raise InvalidInputError("points do not span a line defined over the base field")
        pp = line_quadric_intersect(plane, quadric)
        if pp.kind != PAIR:
            raise InvalidInputError("points do not form a pair of distinct intersection points")
        return pp

    @property
    def field(self):
        return self.quadric.field

    def points(self):
        """``(K, [p1, p2])`` over a splitting field of the form, normalized, sorted.

        Tangent pairs return the double point twice; contained lines raise.
        """
        if self.kind == CONTAINED:
            raise BoundaryError("line lies in the quadric")
        F = self.field
        c0, c1, c2 = self.form
        w1, w2 = self.plane.rows
        if F.is_zero(c0):
            K = F
            params = [(F.one, F.zero), (F.neg(c2), c1)] if not F.is_zero(c1) else [(F.one, F.zero)] * 2
        else:
            f = Poly([c2, c1, c0], F)  # c0 s^2 + c1 s + c2 at t = 1
            if self.kind == TANGENT:
                K = F
                s = F.div(F.neg(c1), F.mul(F.from_int(2), c0))
                params = [(s, F.one)] * 2
            else:
                K, roots = splitting_extension(f)
                params = [(r, K.one) for r in roots]
        # params are already in K; only the plane needs coercion
        u1 = [K.coerce(x, F) for x in w1]
        u2 = [K.coerce(x, F) for x in w2]
        out = [_normalize(K, tuple(K.add(K.mul(s, a), K.mul(t, b)) for a, b in zip(u1, u2)))
               for s, t in params]
        return K, sorted(out)

    def dump(self):
        F = self.field
        return {"plane": [[F.dump(c) for c in r] for r in self.plane.rows],
                "form": [F.dump(c) for c in self.form], "kind": self.kind}

    def __eq__(self, other):
        return (isinstance(other, PointPairOnQuadric) and other.plane == self.plane
                and other.form == self.form and other.kind == self.kind)

    def __hash__(self):
        return hash((self.plane, self.form))

    def __repr__(self):
        return f"PointPairOnQuadric(kind={self.kind}, form={self.form}, plane={list(self.plane.rows)})"


def line_quadric_intersect(W: Subspace, qs: QuadraticSpace) -> PointPairOnQuadric:
    """Restrict ``q`` to the projective line ``P(W)``."""
    F = qs.field
    if W.field != F or W.ambient != qs.dim:
        raise InvalidInputError("plane and quadric live in different spaces")
    if W.dim != 2:
        raise InvalidInputError("line_quadric_intersect needs a 2-dimensional subspace")
    if not qs.is_nondegenerate:
        raise InvalidInputError("quadratic form is degenerate")
    w1, w2 = W.rows
    c0 = qs.value(w1)
    c1 = F.mul(F.from_int(2), qs.bilinear(w1, w2))
    c2 = qs.value(w2)
    form = (c0, c1, c2)
    if all(F.is_zero(c) for c in form):
        return PointPairOnQuadric(W, form, CONTAINED, qs)
    form = _normalize(F, form)
    disc = F.sub(F.mul(form[1], form[1]), F.mul(F.from_int(4), F.mul(form[0], form[2])))
    kind = TANGENT if F.is_zero(disc) else PAIR
    return PointPairOnQuadric(W, form, kind, qs)


def pair_to_line(pp: PointPairOnQuadric) -> Subspace:
    """The line through the two points, computed over their field and descended."""
    if pp.kind != PAIR:
        raise BoundaryError(f"{pp.kind} point pair does not determine a line")
    K, pts = pp.points()
    span = Subspace(K, pp.quadric.dim, pts)
    W = span.descend(pp.field)
    if W is None or W.dim != 2:
        raise StructuralError("conjugate pair does not descend to a line")
    return W


# -- split model: right ideals of M_4 and the Klein quadric ------------------------

def ideal_column_space(I: RightIdeal) -> Subspace:
    """Column space ``U`` of a right ideal ``I = {X : col(X) in U}`` of ``M_n``."""
    n = I.algebra.matrix_size
    if n is None:
        raise InvalidInputError("column spaces are defined for matrix algebras only")
    F = I.algebra.field
    cols = []
    for r in I.subspace.rows:
        for j in range(n):
            cols.append([r[i * n + j] for i in range(n)])
    return Subspace(F, n, cols)


def ideal_of_column_space(A: Algebra, U: Subspace) -> RightIdeal:
    """``{X in M_n : col(X) in U}``, spanned by ``u e_j^T``."""
    n = A.matrix_size
    if n is None or U.ambient != n or U.field != A.field:
        raise InvalidInputError("column space does not match the matrix algebra")
    F = A.field
    vecs = []
    for u in U.rows:
        for j in range(n):
            v = [F.zero] * (n * n)
            for i in range(n):
                v[i * n + j] = u[i]
            vecs.append(v)
    return RightIdeal(A, Subspace(F, n * n, vecs), check=False)


def severi_brauer_point(I: RightIdeal) -> PluckerPoint:
    """Image of a reduced-rank-2 right ideal of ``M_4`` on the Klein quadric."""
    if I.algebra.matrix_size != 4:
        raise InvalidInputError("the split model needs M_4")
    U = ideal_column_space(I)
    if U.dim != 2:
        raise InvalidInputError("ideal does not have reduced rank 2")
    return plucker_embed(U)


def etale2_to_line(E) -> Subspace:
    """Type-[2,2] etale subalgebra of ``M_4(F)`` -> line in P^5 through its two Klein points."""
    from .etale import type_of
    from .moduli import ideal_system_from_subalgebra

    A = E.algebra
    if A.matrix_size != 4 or type_of(E) != [2, 2]:
        raise InvalidInputError("etale2_to_line needs a type [2,2] subalgebra of M_4")
    system = ideal_system_from_subalgebra(E)
    K = system.field
    pts = [severi_brauer_point(I).coords for I in system.ideals]
    line = Subspace(K, 6, pts).descend(A.field)
    if line is None:
        raise StructuralError("Klein points of the subalgebra do not descend")
    return line


def line_to_etale2(A: Algebra, line: Subspace):
    """Inverse of :func:`etale2_to_line` on lines meeting the Klein quadric in two
    points whose planes are complementary."""
    from .etale import EtaleSubalgebra
    from .moduli import IdealSystem, subalgebra_from_ideal_system

    if A.matrix_size != 4:
        raise InvalidInputError("the split model needs M_4")
    F = A.field
    pp = line_quadric_intersect(line, klein_quadric(F))
    if pp.kind != PAIR:
        raise BoundaryError(f"line is {pp.kind} to the Klein quadric")
    K, pts = pp.points()
    if K.is_zero(wedge_form(K, pts[0], pts[1])):
        raise BoundaryError("the two planes meet")
    AK = A.over(K)
    planes = [plucker_inverse(PluckerPoint(p, K)) for p in pts]
    system = IdealSystem(ideal_of_column_space(AK, U) for U in planes)
    E = subalgebra_from_ideal_system(system).descend(F)
    if E is None:
        raise StructuralError("subalgebra does not descend")
    return EtaleSubalgebra(A, E.subspace)
