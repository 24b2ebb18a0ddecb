"""Classical group computations on embedded groups.

These double as oracles for the semigroup-level checks: everything here is a
direct scan over the group's own multiplication table.
"""
from dataclasses import dataclass

import numpy as np

from .errors import ContainmentError, MembershipError, PreconditionError
from .perms import Transformation
from .subgroups import EmbeddedGroup, _restrict, subgroups_of


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n, p):
    """Largest power of p dividing n."""
    q = 1
    while n % (q * p) == 0:
        q *= p
    return q


def _member(G, x):
    if x not in G:
        raise MembershipError(f"element {x} is not in the group {G.members}")


def _contained(G, H):
    if H.parent is not G.parent or not set(H.members) <= set(G.members):
        raise ContainmentError(f"{H.members} is not contained in {G.members}")
    if H.identity != G.identity:
        raise ContainmentError(f"{H.members} does not share the identity of {G.members}")


def element_order(G, x):
    _member(G, x)
    m, p = 1, x
    while p != G.identity:
        p = G.mul(p, x)
        m += 1
    return m


def cyclic_subgroup(G, x):
    _member(G, x)
    powers, p = [x], x
    while p != G.identity:
        p = G.mul(p, x)
        powers.append(p)
    return _restrict(G, powers)


def is_abelian(G):
    idx = np.asarray(G.members)
    sub = G.parent.table[np.ix_(idx, idx)]
    return bool(np.array_equal(sub, sub.T))


def is_cyclic(G):
    return any(element_order(G, x) == G.order for x in G.members)


@dataclass(frozen=True)
class ConjugacyReport:
    classes: tuple
    normalizer_orders: dict
    center: tuple


def _inverse_positions(G, local):
    ident = G.members.index(G.identity)
    return np.argmax(local == ident, axis=1)


def conjugation_matrix(G):
    """conj[g, a] = g a g^-1, in positions of G.members."""
    local = G.local_table()
    inv = _inverse_positions(G, local)
    return local[local, inv[:, None]]


def conjugacy_analysis(G):
    local = G.local_table()
    conj = conjugation_matrix(G)
    n = G.order
    members = G.members
    commute = local == local.T
    seen = np.zeros(n, dtype=np.bool_)
    classes, normalizers = [], {}
    for a in range(n):
        if seen[a]:
            continue
        cls = np.unique(conj[:, a])
        seen[cls] = True
        classes.append(tuple(sorted(members[i] for i in cls)))
        normalizers[members[a]] = int(commute[a].sum())
    center = tuple(members[i] for i in np.flatnonzero(commute.all(axis=1)))
    # class equation
    total = len(center) + sum(n // normalizers[c[0]] for c in classes if len(c) > 1)
    assert total == n, "class equation failed"
    assert all(n // normalizers[c[0]] == len(c) for c in classes)
    return ConjugacyReport(tuple(classes), normalizers, center)


def are_conjugate(G, x, y):
    _member(G, x)
    _member(G, y)
    return any(G.mul(G.mul(g, y), G.inverse(g)) == x for g in G.members)


def lagrange_check(G, H):
    _contained(G, H)
    return G.order % H.order == 0


def cauchy_witness(G, p):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if G.order % p:
        return None
    for x in G.members:
        if element_order(G, x) == p:
            return x
    raise AssertionError(f"no element of order {p} in a group of order {G.order}")


def sylow_subgroups(G, p, max_group_order=720):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    target = p_part(G.order, p)
    return [K for K in subgroups_of(G, 1, max_group_order) if K.order == target]


def conjugate_subgroup(G, H, g):
    return _restrict(G, {G.mul(G.mul(g, h), G.inverse(g)) for h in H.members})


def sylow_count_check(G, p, max_group_order=720):
    """Count is 1 mod p and all Sylow p-subgroups are conjugate."""
    syl = sylow_subgroups(G, p, max_group_order)
    if not syl or len(syl) % p != 1 % p:
        return False
    orbit = {conjugate_subgroup(G, syl[0], g).members for g in G.members}
    return orbit == {K.members for K in syl}


def double_coset_size_check(G, A, B, x):
    _contained(G, A)
    _contained(G, B)
    _member(G, x)
    axb = {G.mul(G.mul(a, x), b) for a in A.members for b in B.members}
    xinv = G.inverse(x)
    xbx = {G.mul(G.mul(x, b), xinv) for b in B.members}
    inter = len(set(A.members) & xbx)
    return len(axb) * inter == A.order * B.order


def regular_representation(G):
    """g -> the permutation x -> x*g of G.members numbered 1..|G|."""
    local = G.local_table()
    return {g: Transformation(tuple(int(v) + 1 for v in local[:, k]))
            for k, g in enumerate(G.members)}


def verify_representation(G, rep):
    """Injective, multiplicative, and every image a permutation."""
    images = list(rep.values())
    if len(set(images)) != G.order or not all(t.is_bijective for t in images):
        return False
    return all(rep[G.mul(g, h)] == rep[g].then(rep[h]) for g in G.members for h in G.members)
