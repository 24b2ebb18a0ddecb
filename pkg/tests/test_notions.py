import pytest

from ssg.errors import MembershipError, PreconditionError
from ssg.groups import element_order
from ssg.notions import (
    INVERSE_FREE,
    INVERSE_GROUP,
    MIXED,
    SInversePair,
    classify_s_inverse,
    co_inverse_check,
    has_s_conjugate,
    has_s_inverse,
    is_self_inversed_pair,
    reflexive_s_conjugates,
    s_conjugates,
    s_inverse_pairs,
)
from ssg.perms import cycle_type
from ssg.semigroup import make_cyclic_group, make_symmetric_group, make_zn_mul, transformation_of
from ssg.subgroups import as_group, group_from, maximal_subgroup_at


def cyclic(n):
    return as_group(make_cyclic_group(n))


def test_classification():
    assert classify_s_inverse(as_group(make_symmetric_group(3))) == INVERSE_FREE
    assert classify_s_inverse(as_group(make_symmetric_group(4))) == MIXED
    for p in (5, 7, 11, 13):
        assert classify_s_inverse(cyclic(p)) == INVERSE_GROUP


def test_order_rule():
    # in a group the related pair is forced, so orders 2 and 3 fail
    for n in range(2, 13):
        G = cyclic(n)
        for x in G.members:
            if x != G.identity:
                assert has_s_inverse(G, x) == (element_order(G, x) > 3)


def test_pairs_records():
    U5 = group_from(make_zn_mul(5), [1, 2, 3, 4])
    [pair] = s_inverse_pairs(U5)
    assert (pair.x, pair.y, pair.related) == (2, 3, (4, 4))
    assert pair.swapped().swapped() == pair


def test_pairs_symmetric():
    for n in (5, 7, 8, 12):
        G = cyclic(n)
        for q in s_inverse_pairs(G):
            assert has_s_inverse(G, q.x) and has_s_inverse(G, q.y)
            assert G.mul(q.x, q.y) == G.identity and G.mul(q.a, q.b) == G.identity


def test_identity_and_membership_errors():
    G = cyclic(5)
    with pytest.raises(PreconditionError):
        has_s_inverse(G, G.identity)
    with pytest.raises(MembershipError):
        has_s_inverse(group_from(make_zn_mul(5), [1, 4]), 2)
    with pytest.raises(PreconditionError):
        s_inverse_pairs(as_group(make_cyclic_group(1)))


def test_self_inversed_and_co_inverse():
    C25 = cyclic(25)
    pair = SInversePair(20, 5, 10, 15, ("xa=y", "yb=x"))
    assert is_self_inversed_pair(C25, pair)
    assert co_inverse_check(C25, pair)
    with pytest.raises(PreconditionError):
        is_self_inversed_pair(C25, SInversePair(20, 5, 1, 24, ("xa=y",)))


def test_s_conjugates_s3():
    S = make_symmetric_group(3)
    G = as_group(S)
    p1, p2, p3, p4 = (S.index_of(x) for x in ("(2,3)", "(1,3)", "(1,2)", "(1,2,3)"))
    assert any(w.y == p3 and w.a == p2 for w in s_conjugates(G, p1))
    assert not has_s_conjugate(G, p4)
    assert [S.labels[w.a] for w in reflexive_s_conjugates(G, p4)] == ["(1,3,2)"]
    assert has_s_conjugate(G, p4, include_reflexive=True)


def test_abelian_groups_have_no_s_conjugates():
    G = maximal_subgroup_at(make_zn_mul(15), 1)
    assert not any(has_s_conjugate(G, x) for x in G.members)


def test_s4_witnesses_share_cycle_type():
    S = make_symmetric_group(4)
    G = as_group(S)
    seen = 0
    for x in G.members:
        for w in s_conjugates(G, x, include_reflexive=True):
            seen += 1
            assert G.mul(G.mul(w.a, w.y), G.inverse(w.a)) == w.x
            assert len({cycle_type(transformation_of(S, v)) for v in (w.x, w.y, w.a)}) == 1
    assert seen
