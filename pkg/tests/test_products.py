import math

import pytest

from ssg.errors import PreconditionError
from ssg.products import (
    cayley_s_embedding,
    find_strong_decomposition,
    internal_product_check,
    s_direct_product_check,
    s_homomorphism_check,
    strong_internal_product_check,
)
from ssg.semigroup import from_table, make_full_transformation, make_zn_mul
from ssg.subgroups import ANY, GLOBAL, all_subgroups, group_from


def units(n):
    return tuple(x for x in range(n) if math.gcd(x, n) == 1)


def test_internal_products():
    Z7 = make_zn_mul(7)
    assert internal_product_check(Z7, [[0, 1], range(1, 7)])
    assert not internal_product_check(Z7, [[0], range(1, 7)])
    assert internal_product_check(make_zn_mul(6), [[1, 3, 0], [1, 5], [1, 2, 4]])
    with pytest.raises(PreconditionError):
        internal_product_check(Z7, [])


def test_strong_product_z7_needs_relaxation():
    Z7 = make_zn_mul(7)
    strict = strong_internal_product_check(Z7, [0, 1], [range(1, 7)])
    assert not strict and "Smarandache" in strict.reason
    relaxed = strong_internal_product_check(Z7, [0, 1], [range(1, 7)], relaxed=True)
    assert relaxed.ok and relaxed.relaxed_b


def test_strong_product_rejects_non_maximal_factor():
    Z12 = make_zn_mul(12)
    v = strong_internal_product_check(Z12, [0, 1, 2, 3, 4, 6, 8, 9, 10], [[1, 11]])
    assert not v and "maximal" in v.reason


def test_decomposition_z20():
    Z20 = make_zn_mul(20)
    dec = find_strong_decomposition(Z20)
    assert dec.verified and dec.construction == "complement"
    assert dec.factors == (units(20),)
    assert 1 in dec.b_factor and 0 in dec.b_factor and {5, 15} <= set(dec.b_factor)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_decomposition_zp_is_augmented(p):
    dec = find_strong_decomposition(make_zn_mul(p))
    assert dec.construction == "augmented"
    assert dec.b_factor == (0, 1, p - 1)


def test_decomposition_requires_identity():
    with pytest.raises(PreconditionError):
        find_strong_decomposition(from_table([[0, 0], [1, 1]]))


def test_decompositions_verify_when_found(corpus):
    for S in corpus:
        if S.identity is None or S.size > 64:
            continue
        dec = find_strong_decomposition(S)
        if dec is not None:
            assert strong_internal_product_check(S, dec.b_factor, dec.factors)


def test_s_direct_products():
    Z6 = make_zn_mul(6)
    S3 = make_full_transformation(3)
    v = s_direct_product_check([S3, Z6])
    assert not v and v.details["violating_factor"] == 0
    Z7 = make_zn_mul(7)
    v = s_direct_product_check([Z7, Z7], ANY)
    assert not v and len(v.details["maximal"]) == 3
    v = s_direct_product_check([Z7, Z7], GLOBAL)
    assert v and v.details["maximal"] == [tuple(sorted(a * 7 + b for a in range(1, 7) for b in range(1, 7)))]


def test_homomorphism_examples():
    Z12, Z7 = make_zn_mul(12), make_zn_mul(7)
    phi = {x: 0 for x in range(12)}
    phi.update({1: 1, 11: 6})
    A, A2 = group_from(Z12, [1, 11]), group_from(Z7, [1, 6])
    assert s_homomorphism_check(Z12, Z7, phi, A, A2, isomorphism=True)
    bad = dict(phi)
    bad[11] = 2
    assert not s_homomorphism_check(Z12, Z7, bad, A, A2)
    with pytest.raises(PreconditionError):
        s_homomorphism_check(Z12, Z7, {1: 1}, A, A2)


def test_homomorphisms_compose():
    Z12, Z7, Z9 = make_zn_mul(12), make_zn_mul(7), make_zn_mul(9)
    A, A2, A3 = group_from(Z12, [1, 11]), group_from(Z7, [1, 6]), group_from(Z9, [1, 8])
    f = {x: 0 for x in range(12)}
    f.update({1: 1, 11: 6})
    g = {x: 0 for x in range(7)}
    g.update({1: 1, 6: 8})
    assert s_homomorphism_check(Z12, Z7, f, A, A2) and s_homomorphism_check(Z7, Z9, g, A2, A3)
    h = {x: g[f[x]] for x in range(12)}
    assert s_homomorphism_check(Z12, Z9, h, A, A3, isomorphism=True)


def test_cayley_embedding():
    Z12 = make_zn_mul(12)
    for G in all_subgroups(Z12):
        n, rep = cayley_s_embedding(Z12, G)
        assert n == G.order
        assert len(set(rep.values())) == n
        assert all(t.is_bijective and t.degree == n for t in rep.values())
