import pytest

from etalgebra.algebra import Partition, make_matrix_algebra, make_quaternion_algebra
from etalgebra.errors import BudgetExceededError, InvalidInputError
from etalgebra.etale import type_of
from etalgebra.fields import GF, QQ
from etalgebra.oracle import (EnumerationReport, count_ideal_systems, enum_etale_subalgebras,
                              enum_ideal_systems, line_quadric_tally, psi_coverage,
                              verify_moduli_count)
from etalgebra.plucker import split_form


def test_enumerate_examples():
    A = make_matrix_algebra(2, GF(2))
    subs = enum_etale_subalgebras(A, 1)
    assert len(subs) == 1 and subs[0].subspace.rows == (A.one_coords,)
    assert len(enum_etale_subalgebras(A, 2)) == 4
    assert len(enum_etale_subalgebras(make_matrix_algebra(2, GF(3)), 2)) == 9


def test_enumeration_is_sorted_and_unique():
    subs = enum_etale_subalgebras(make_matrix_algebra(2, GF(5)), 2)
    keys = [E.subspace.sort_key() for E in subs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys) == 25


@pytest.mark.parametrize("q", [2, 3, 5])
def test_ideal_system_counts_m2(q):
    A = make_matrix_algebra(2, GF(q))
    assert count_ideal_systems(A, [1, 1]) == q * q
    assert count_ideal_systems(A, [2]) == 1
    # split systems are pairs of rational lines, q(q+1)/2 of them
    K, systems = enum_ideal_systems(A, Partition([1, 1]))
    split = sum(1 for S in systems if all(I.subspace.descend(A.field) is not None for I in S.ideals))
    assert split == q * (q + 1) // 2


def test_budget_and_scope_errors():
    A = make_matrix_algebra(3, GF(2))
    with pytest.raises(BudgetExceededError):
        enum_etale_subalgebras(A, 3, budget=100)
    with pytest.raises(BudgetExceededError):
        enum_ideal_systems(A, [1, 1, 1], budget=100)
    with pytest.raises(InvalidInputError):
        enum_etale_subalgebras(make_matrix_algebra(2, QQ), 2)
    H = make_quaternion_algebra(1, 1, GF(3))
    with pytest.raises(InvalidInputError):
        enum_ideal_systems(H, [1, 1])
    with pytest.raises(InvalidInputError):
        enum_ideal_systems(A, [1, 1])


def test_report_json():
    r = verify_moduli_count(make_matrix_algebra(2, GF(2)), [2])
    assert isinstance(r, EnumerationReport)
    js = r.to_json()
    assert js == {"algebra": {"kind": "matrix", "n": 2, "field": "GF(2)"}, "rho": [2],
                  "count_subalgebras": 1, "count_systems": 1, "match": True, "bijection": True}
    assert "seconds" in r.to_json(timing=True)


def test_non_split_quaternion_subalgebras_all_type_11():
    # over a finite field every quaternion algebra splits; types still sum to 2
    H = make_quaternion_algebra(2, 2, GF(3))
    for E in enum_etale_subalgebras(H, 2):
        assert type_of(E) == [1, 1]


@pytest.mark.parametrize("q", [2, 3, 5])
def test_psi_surjective_on_m2(q):
    reached, unreached = psi_coverage(make_matrix_algebra(2, GF(q)))
    assert unreached == [] and len(reached) == q * q


def test_psi_not_surjective_on_m3_f2():
    # the split torus F_2^3 has no element with three distinct eigenvalues in F_2
    A = make_matrix_algebra(3, GF(2))
    reached, unreached = psi_coverage(A)
    assert len(reached) == 36 and len(unreached) == 28
    assert all(type_of(E) == [1, 1, 1] for E in unreached)


def test_line_quadric_tally_f3():
    t = line_quadric_tally(split_form(GF(3)))
    assert t["points"] == 16 and t["contained"] == 8
    assert t["pair"] + t["tangent"] + t["contained"] == 130
    assert t["unreached_pairs"] == 8 * (6 + 3)
