import pytest

from ssg.cosets import (
    coset_partition_report,
    double_coset,
    double_coset_report,
    is_pseudo_simple,
    is_s_normal,
    quotient,
    s_coset,
    s_normal_subgroups,
)
from ssg.errors import PreconditionError
from ssg.semigroup import make_full_transformation, make_symmetric_group, make_zn_mul
from ssg.subgroups import all_subgroups, as_group, group_from, subgroups_of


@pytest.fixture(scope="module")
def z10():
    S = make_zn_mul(10)
    return S, group_from(S, [1, 9]), group_from(S, [2, 4, 6, 8])


def test_cosets_z12():
    Z12 = make_zn_mul(12)
    A = group_from(Z12, [3, 9])
    assert s_coset(Z12, A, 4) == (0,)
    assert s_coset(Z12, A, 5) == (3, 9)
    assert s_coset(Z12, A, 2, "right") == (6,)
    with pytest.raises(PreconditionError):
        s_coset(Z12, A, 1, "middle")


def test_left_and_right_differ_in_s3():
    S = make_full_transformation(3)
    A = group_from(S, [S.index_of("[1,2,3]"), S.index_of("[1,3,2]")])
    left = coset_partition_report(S, A, "left")
    right = coset_partition_report(S, A, "right")
    assert left.classes != right.classes


def test_partition_report(z10):
    S, A, B = z10
    rep = coset_partition_report(S, A)
    assert rep.is_partition and not rep.uniform
    assert sorted(rep.class_sizes) == [1, 1, 2, 2, 2, 2]
    rep = coset_partition_report(S, B)
    assert sorted(rep.classes) == [(0,), (2, 4, 6, 8)]
    assert not rep.covers


def test_group_cosets_partition_uniformly():
    G = make_symmetric_group(4)
    for K in subgroups_of(as_group(G)):
        for side in ("left", "right"):
            rep = coset_partition_report(G, K, side)
            assert rep.is_partition and rep.uniform
            assert len(rep.classes) * K.order == G.size


def test_double_cosets(z10):
    S, A, B = z10
    assert double_coset(S, A, B, 3) == (2, 4, 6, 8)
    assert double_coset(S, A, B, 5) == (0,)


def test_double_coset_report_s3():
    S = make_full_transformation(3)
    A = group_from(S, [S.index_of("[1,2,3]"), S.index_of("[1,3,2]")])
    B = group_from(S, [S.index_of("[1,2,3]"), S.index_of("[3,2,1]")])
    rep = double_coset_report(S, A, B)
    assert len(rep.classes) == 10 and rep.is_s_equivalence
    assert sorted(len(c) for c in rep.classes) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 4]
    shown = [["[1,1,1]", "[3,3,3]"], ["[2,2,2]"], ["[2,2,1]", "[2,1,2]", "[2,2,3]", "[2,3,2]"],
             ["[1,2,1]", "[1,1,2]", "[3,3,2]", "[3,2,3]"], ["[3,2,1]", "[3,1,2]", "[1,2,3]", "[1,3,2]"],
             ["[2,3,1]", "[2,1,3]"], ["[1,3,3]", "[3,1,1]"], ["[3,3,1]", "[3,1,3]", "[1,3,1]", "[1,1,3]"],
             ["[2,3,3]", "[2,1,1]"]]
    classes = set(rep.classes)
    assert all(tuple(sorted(S.index_of(v) for v in c)) in classes for c in shown)


def test_double_coset_failures_named(z10):
    S, A, B = z10
    rep = double_coset_report(S, A, B)
    assert "reflexive" in rep.failures and not rep.is_s_equivalence


def test_normality(z10):
    S, A, B = z10
    assert [g.members for g in s_normal_subgroups(S)] == [(2, 4, 6, 8)]
    assert is_s_normal(S, B) and not is_s_normal(S, A)
    assert not is_pseudo_simple(S)
    assert is_pseudo_simple(make_full_transformation(3))


def test_quotient(z10):
    S, A, B = z10
    Q = quotient(S, B)
    assert len(Q) == 2 and Q.classes == ((0,), (2, 4, 6, 8))
    assert Q.table == ((0, 0), (0, 1))
    with pytest.raises(PreconditionError):
        quotient(S, A)


def test_quotient_tables_are_associative():
    for n in range(5, 31):
        Zn = make_zn_mul(n)
        for A in s_normal_subgroups(Zn):
            t = quotient(Zn, A).table
            k = len(t)
            assert all(t[t[a][b]][c] == t[a][t[b][c]]
                       for a in range(k) for b in range(k) for c in range(k))


def test_units_never_normal_pairs():
    for n in range(5, 41):
        Zn = make_zn_mul(n)
        assert not is_s_normal(Zn, group_from(Zn, [1, n - 1]))


def test_normal_subgroups_are_subgroups():
    Zn = make_zn_mul(30)
    everything = {g.members for g in all_subgroups(Zn)}
    assert all(g.members in everything for g in s_normal_subgroups(Zn))
