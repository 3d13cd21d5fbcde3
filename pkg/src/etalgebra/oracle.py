"""Brute-force oracles over small finite fields.

Two independent enumerations of the same moduli points:

* etale subalgebras of ``A`` found by walking every subspace containing 1
  (one RREF representative each) and testing it directly;
* unordered direct-sum systems of right ideals of ``A (x) F_{q^L}`` that are
  stable under Frobenius, built from column spaces (split model ``M_n`` only).

:func:`verify_moduli_count` compares the two and checks that the explicit
maps between them are inverse bijections.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field

from . import linalg
from .algebra import Algebra, Partition
from .errors import BudgetExceededError, InvalidInputError
from .etale import EtaleSubalgebra, is_etale_subalgebra, type_of
from .galois import embedding, frobenius
from .linalg import Subspace, gaussian_binomial, iter_rref
from .moduli import (IdealSystem, ideal_system_from_subalgebra, in_U, psi,
                     subalgebra_from_ideal_system)
from .plucker import (CONTAINED, PAIR, TANGENT, QuadraticSpace, ideal_of_column_space,
                      line_quadric_intersect)
from .poly import finite_extension

DEFAULT_BUDGET = 2**30


def _require_finite(A: Algebra):
    if not A.field.is_finite:
        raise InvalidInputError("oracles run over finite fields only")


def _check_budget(count, budget, what):
    if count > budget:
        raise BudgetExceededError(f"{what}: {count} candidates exceed the budget of {budget}")


def enum_etale_subalgebras(A: Algebra, m: int, budget: int = DEFAULT_BUDGET):
    """Every ``m``-dimensional etale subalgebra of ``A``, in canonical order.

    A subspace ``E`` containing 1 is determined by ``E`` intersected with the
    hyperplane ``x_p = 0`` (``p`` the first nonzero coordinate of 1), so
    candidates are the ``(m-1)``-subspaces of that hyperplane.
    """
    _require_finite(A)
    F = A.field
    d = A.dim
    if m < 1 or m > d:
        raise InvalidInputError(f"subalgebra dimension {m} out of range for an algebra of dimension {d}")
    _check_budget(gaussian_binomial(d - 1, m - 1, F.order), budget, "enumerate")
    one = A.one_coords
    p = next(i for i, c in enumerate(one) if not F.is_zero(c))
    out = []
    for rows in iter_rref(F, d - 1, m - 1):
        vecs = [one] + [r[:p] + (F.zero,) + r[p:] for r in rows]
        V = Subspace(F, d, vecs)
        if is_etale_subalgebra(V, A):
            out.append(EtaleSubalgebra(A, V, check=False))
    out.sort(key=lambda E: E.subspace.sort_key())
    return out


def enum_all_etale_subalgebras(A: Algebra, budget: int = DEFAULT_BUDGET):
    """Etale subalgebras of every dimension ``1..deg(A)``."""
    n = A.degree or A.dim
    return [E for m in range(1, n + 1) for E in enum_etale_subalgebras(A, m, budget)]


def system_field(A: Algebra, rho: Partition):
    """``F_{q^L}`` with ``L = lcm(1..max multiplicity of rho)``.

    Frobenius permutes the members of a rational system preserving their
    ranks, so each orbit has length at most the multiplicity of its rank.
    """
    mult = max(rho.multiplicities().values())
    L = math.lcm(*range(1, mult + 1))
    return finite_extension(A.field, L), L


def _frob_orbit(K, U: Subspace, q: int):
    orbit = [U]
    while True:
        nxt = U.map(lambda x: frobenius(K, x, q), K)
        if nxt == orbit[0]:
            return orbit
        orbit.append(nxt)
        U = nxt


def _column_space_systems(A: Algebra, rho: Partition, budget):
    n = A.matrix_size
    F = A.field
    K, L = system_field(A, rho)
    need = Counter(rho.parts)
    total = sum(gaussian_binomial(n, d, K.order) for d in need)
    _check_budget(total, budget, "ideal systems")
    q = F.order
    # Frobenius orbits of subspaces with an admissible dimension and length
    orbits = []
    seen = set()
    for d in sorted(need, reverse=True):
        for rows in iter_rref(K, n, d):
            U = Subspace.from_rref(K, n, rows)
            if U in seen:
                continue
            orb = _frob_orbit(K, U, q)
            seen.update(orb)
            if len(orb) <= need[d]:
                orbits.append((d, orb))
    systems = []

    def extend(start, chosen, remaining, span_rows):
        if not +remaining:
            systems.append(list(chosen))
            return
        for idx in range(start, len(orbits)):
            d, orb = orbits[idx]
            if remaining[d] < len(orb):
                continue
            rows = span_rows + [r for U in orb for r in U.rows]
            if linalg.rank(K, rows) != len(rows):
                continue
            remaining[d] -= len(orb)
            chosen.extend(orb)
            extend(idx + 1, chosen, remaining, rows)
            del chosen[len(chosen) - len(orb):]
            remaining[d] += len(orb)

    extend(0, [], Counter(need), [])
    return K, systems


def enum_ideal_systems(A: Algebra, rho, budget: int = DEFAULT_BUDGET):
    """Frobenius-stable unordered ideal systems of rank profile ``rho``.

    Returns ``(K, systems)`` with every system an :class:`IdealSystem` in
    ``A (x) K``, sorted canonically.  Only matrix algebras are supported: the
    reduced-rank-``i`` summands of ``M_n`` are ``{X : col(X) in U}`` for
    ``i``-dimensional ``U``.
    """
    _require_finite(A)
    rho = rho if isinstance(rho, Partition) else Partition(rho)
    if A.matrix_size is None:
        raise InvalidInputError("ideal-system enumeration is implemented for matrix algebras only")
    if rho.total != A.degree:
        raise InvalidInputError(f"partition {list(rho)} does not sum to {A.degree}")
    K, spaces = _column_space_systems(A, rho, budget)
    AK = A.over(K)
    q = A.field.order
    out = []
    for us in spaces:
        S = IdealSystem(ideal_of_column_space(AK, U) for U in us)
        # independent of the construction: the idempotent set must be Frobenius stable
        if not S.is_stable(lambda x: frobenius(K, x, q)):
            continue
        out.append(S)
    out.sort(key=IdealSystem.key)
    return K, out


def count_ideal_systems(A: Algebra, rho, budget: int = DEFAULT_BUDGET) -> int:
    return len(enum_ideal_systems(A, rho, budget)[1])


@dataclass
class EnumerationReport:
    algebra: dict
    rho: list
    count_subalgebras: int
    count_systems: int
    match: bool
    bijection: bool
    seconds: float = field(default=0.0, compare=False)

    def to_json(self, timing: bool = False) -> dict:
        out = {"algebra": self.algebra, "rho": self.rho,
               "count_subalgebras": self.count_subalgebras,
               "count_systems": self.count_systems, "match": self.match,
               "bijection": self.bijection}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _to_common(S: IdealSystem, M):
    return S if S.field == M else S.map(embedding(S.field, M))


def verify_moduli_count(A: Algebra, rho, budget: int = DEFAULT_BUDGET) -> EnumerationReport:
    """Count both sides and check the explicit maps are mutually inverse."""
    t0 = time.perf_counter()
    rho = rho if isinstance(rho, Partition) else Partition(rho)
    F = A.field
    subs = [E for E in enum_etale_subalgebras(A, rho.length, budget) if type_of(E) == rho]
    K, systems = enum_ideal_systems(A, rho, budget)

    # subalgebra -> system, compared in a field containing every splitting field
    forward = [ideal_system_from_subalgebra(E) for E in subs]
    deg = math.lcm(K.degree // F.degree, *(S.field.degree // F.degree for S in forward))
    M = finite_extension(F, deg)
    ok = True
    targets = {_to_common(S, M) for S in systems}
    images = [_to_common(S, M) for S in forward]
    ok &= len(set(images)) == len(images) and set(images) == targets

    # system -> subalgebra, and back
    sub_set = set(subs)
    for S in systems:
        E = subalgebra_from_ideal_system(S).descend(F)
        if E is None or E not in sub_set:
            ok = False
            break
        if _to_common(ideal_system_from_subalgebra(E), M) != _to_common(S, M):
            ok = False
            break
    for E, S in zip(subs, forward):
        back = subalgebra_from_ideal_system(S).descend(F)
        ok &= back == E
    return EnumerationReport(algebra=A.descriptor, rho=list(rho.parts),
                             count_subalgebras=len(subs), count_systems=len(systems),
                             match=len(subs) == len(systems), bijection=bool(ok),
                             seconds=time.perf_counter() - t0)


# -- psi coverage ---------------------------------------------------------------

def elements_in_U(A: Algebra, budget: int = DEFAULT_BUDGET):
    _require_finite(A)
    _check_budget(A.field.order ** A.dim, budget, "elements")
    return [a for a in A.elements() if in_U(a)]


def psi_coverage(A: Algebra, budget: int = DEFAULT_BUDGET):
    """``(reached, unreached)``: maximal etale subalgebras hit by psi on ``U(F_q)`` and the rest."""
    reached = {}
    for b in elements_in_U(A, budget):
        reached.setdefault(psi(b), b)
    every = enum_etale_subalgebras(A, A.degree, budget)
    unreached = [E for E in every if E not in reached]
    return reached, unreached


# -- line/quadric tally ----------------------------------------------------------

def _projective_points(K, n):
    for rows in iter_rref(K, n, 1):
        yield rows[0]


def line_quadric_tally(qs: QuadraticSpace) -> dict:
    """Classify every line of ``P(V)`` against ``Q`` and count unreached point pairs.

    ``unreached_pairs`` counts off-diagonal rational points of ``S^2 Q`` (two
    rational points, or a conjugate pair) whose line lies inside ``Q``.
    """
    F = qs.field
    if not F.is_finite:
        raise InvalidInputError("tallies run over finite fields only")
    n = qs.dim
    kinds = Counter()
    for rows in iter_rref(F, n, 2):
        kinds[line_quadric_intersect(Subspace.from_rref(F, n, rows), qs).kind] += 1
    rational = sum(1 for p in _projective_points(F, n) if F.is_zero(qs.value(p)))
    K = finite_extension(F, 2)
    qK = qs.over(K)
    over_k = sum(1 for p in _projective_points(K, n) if K.is_zero(qK.value(p)))
    pairs = rational * (rational - 1) // 2 + (over_k - rational) // 2
    return {"pair": kinds[PAIR], "tangent": kinds[TANGENT], "contained": kinds[CONTAINED],
            "points": rational, "offdiagonal_pairs": pairs,
            "unreached_pairs": pairs - kinds[PAIR]}
