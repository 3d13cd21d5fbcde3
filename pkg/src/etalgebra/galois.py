"""Field homomorphisms between towers and the Galois actions used here.

The absolute Galois group is never built.  Over finite fields its action is
the Frobenius ``x -> x^q``; over ``Q(sqrt d)`` it is ``sqrt d -> -sqrt d``.
"""

from __future__ import annotations

import functools

from .errors import InvalidInputError
from .fields import ExtensionField, Field
from .poly import Poly, find_roots


class FieldHom:
    """Embedding ``source -> target`` fixed on the common prime field.

    Built level by level: the base is embedded recursively, the generator is
    sent to the smallest root (canonical order) of the image of its modulus.
    """

    def __init__(self, source: Field, target: Field, base_hom=None, root=None):
        self.source = source
        self.target = target
        self.base_hom = base_hom
        self.root = root

    def __call__(self, x):
        if self.root is None:
            return self.target.coerce(x, self.source)
        T = self.target
        acc = T.zero
        for c in reversed(x):
            acc = T.add(T.mul(acc, self.root), self.base_hom(c))
        return acc

    def vector(self, v):
        return tuple(self(c) for c in v)

    def __repr__(self):
        return f"FieldHom({self.source!r} -> {self.target!r})"


@functools.lru_cache(maxsize=None)
def embedding(source: Field, target: Field) -> FieldHom:
    if source == target or target.extends(source):
        return FieldHom(source, target)
    if source.base is None:
        raise InvalidInputError(f"no embedding {source!r} -> {target!r}")
    if source.prime_field != target.prime_field:
        raise InvalidInputError(f"no embedding {source!r} -> {target!r}")
    if target.is_finite and target.degree % source.degree:
        raise InvalidInputError(f"no embedding {source!r} -> {target!r}: degree does not divide")
    base_hom = embedding(source.base, target)
    g = Poly([base_hom(c) for c in source.modulus], target)
    roots = find_roots(g, target)
    if not roots:
        raise InvalidInputError(f"no embedding {source!r} -> {target!r}")
    return FieldHom(source, target, base_hom, roots[0])


def frobenius(K: Field, x, q: int):
    """``x**q``; with ``q`` the size of a finite subfield this generates Gal(K/F_q)."""
    return K.pow(x, q)


def frobenius_vector(K: Field, v, q: int):
    return tuple(K.pow(c, q) for c in v)


def conjugate(K: ExtensionField, x):
    """Nontrivial automorphism of ``Q(sqrt d)`` (modulus ``x^2 - d``)."""
    if K.characteristic != 0 or K.n != 2 or K.modulus[1] != 0:
        raise InvalidInputError(f"conjugation is defined for Q(sqrt d), not {K!r}")
    return (x[0], -x[1])


def conjugate_vector(K: ExtensionField, v):
    return tuple(conjugate(K, c) for c in v)
