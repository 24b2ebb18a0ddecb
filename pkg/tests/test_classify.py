import pytest

from ssg.classify import (
    LAGRANGE,
    NON_LAGRANGE,
    WEAKLY_LAGRANGE,
    cauchy_elements,
    classify,
    hyper_subsemigroups,
    is_cauchy_semigroup,
    is_hyper_subsemigroup,
    is_p_sylow_semigroup,
    is_s_semigroup,
    is_s_simple,
    s_subsemigroup_check,
    sylow_analysis,
)
from ssg.errors import PreconditionError
from ssg.semigroup import from_table, make_full_transformation, make_matrix_semigroup, make_zn_mul
from ssg.subgroups import ANY, GLOBAL


def test_is_s_semigroup():
    ok, w = is_s_semigroup(make_zn_mul(12))
    assert ok and w.order >= 2
    ok, w = is_s_semigroup(from_table([[0, 0], [1, 1]]))
    assert not ok and w is None
    assert not is_s_semigroup(make_zn_mul(2))[0]
    assert is_s_semigroup(make_zn_mul(3))[0]


def test_min_size_one_admits_trivial_groups():
    S = from_table([[0, 0], [1, 1]])
    assert is_s_semigroup(S, ANY, min_size=1)[0]


def test_lagrange_classes():
    assert classify(make_full_transformation(2)).lagrange_class == LAGRANGE
    assert classify(make_full_transformation(3)).lagrange_class == WEAKLY_LAGRANGE
    assert classify(make_zn_mul(7)).lagrange_class == NON_LAGRANGE
    assert classify(make_zn_mul(8)).lagrange_class == LAGRANGE


def test_sylow_anomaly_z16():
    two = {d.prime: d for d in sylow_analysis(make_zn_mul(16))}[2]
    assert two.divides_order
    assert sorted({g.order for g in two.s_p_sylow_subgroups}) == [2, 4, 8]
    assert is_p_sylow_semigroup(make_zn_mul(16))


def test_non_p_sylow_reported_for_non_dividing_primes():
    by_prime = {d.prime: d for d in sylow_analysis(make_zn_mul(7))}
    assert not by_prime[3].divides_order and by_prime[3].non_p_sylow_subgroups
    assert not by_prime[2].divides_order


def test_cauchy():
    assert not is_cauchy_semigroup(make_zn_mul(7))
    M = make_matrix_semigroup(2, 2)
    flags = {c.order: c.is_cauchy for c in cauchy_elements(M)}
    assert flags[2] and not flags[3]


def test_hyper_and_simple():
    for p in (5, 7, 11):
        Zp = make_zn_mul(p)
        assert is_s_simple(Zp)
        assert not is_hyper_subsemigroup(Zp, [0, 1])
    Z12 = make_zn_mul(12)
    hyper = hyper_subsemigroups(Z12)
    assert hyper and all(is_hyper_subsemigroup(Z12, H) for H in hyper)
    assert not is_s_simple(Z12)


def test_hyper_exhaustive_agrees_with_candidates():
    for n in (6, 8, 9, 10, 12):
        Zn = make_zn_mul(n)
        exhaustive = set(hyper_subsemigroups(Zn, ANY, exhaustive=True))
        assert bool(exhaustive) == bool(hyper_subsemigroups(Zn, ANY, exhaustive=False))
        assert set(hyper_subsemigroups(Zn, ANY, exhaustive=False)) <= exhaustive


def test_s_subsemigroup_check():
    Z12 = make_zn_mul(12)
    assert s_subsemigroup_check(Z12, [0, 1, 5])
    assert not s_subsemigroup_check(Z12, [0, 1])
    assert not s_subsemigroup_check(Z12, [2, 4])   # not closed: 2*2*... includes 8
    with pytest.raises(PreconditionError):
        s_subsemigroup_check(Z12, range(12))
    with pytest.raises(PreconditionError):
        s_subsemigroup_check(Z12, [])


def test_prime_order_group_is_not_an_s_subsemigroup_of_itself():
    Z7 = make_zn_mul(7)
    assert not s_subsemigroup_check(Z7, [1, 2, 4])
    assert s_subsemigroup_check(Z7, range(1, 7))


def test_s3_report():
    S = make_full_transformation(3)
    rep = classify(S)
    assert rep.is_s_semigroup and rep.s_commutative is False
    assert rep.s_weakly_commutative and rep.s_weakly_cyclic and not rep.s_cyclic
    assert rep.is_pseudo_simple
    glob = classify(S, GLOBAL)
    assert [g.order for g in glob.maximal] == [6]


def test_report_for_group_free_semigroup():
    rep = classify(from_table([[0, 1, 2], [0, 1, 2], [0, 1, 2]]))
    assert not rep.is_s_semigroup and rep.subgroups == ()


def test_classifier_consistency(corpus):
    for S in corpus:
        if S.size > 64:
            continue
        rep = classify(S)
        if not rep.is_s_semigroup:
            continue
        assert not rep.s_cyclic or rep.s_commutative
        assert not rep.s_commutative or rep.s_weakly_commutative
        assert not rep.s_cyclic or rep.s_weakly_cyclic
        if rep.lagrange_class == LAGRANGE:
            assert all(S.size % g.order == 0 for g in rep.subgroups)
        if rep.lagrange_class == NON_LAGRANGE:
            assert all(S.size % g.order for g in rep.subgroups)
