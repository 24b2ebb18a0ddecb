"""Internal and strong internal direct products, direct products of S-semigroups,
S-homomorphisms and the Cayley-style embedding."""
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .classify import s_subsemigroup_check
from .errors import PreconditionError
from .groups import regular_representation, verify_representation
from .semigroup import closure, direct_product, element_set, is_closed
from .subgroups import ANY, _check_policy, all_subgroups, maximal_subgroups


def _left_product(S, factors):
    mask = np.zeros(S.size, dtype=np.bool_)
    mask[list(factors[0])] = True
    for F in factors[1:]:
        mask = _kernels.set_product_mask(S.table, np.flatnonzero(mask), list(F))
    return mask


def internal_product_check(S, factors):
    """The left-associated set product of the factors is all of S."""
    factors = [element_set(S, F) for F in factors]
    if not factors or not all(factors):
        raise PreconditionError("factors must be a nonempty list of nonempty sets")
    return bool(_left_product(S, factors).all())


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    relaxed_b: bool = False
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def strong_internal_product_check(S, B, factors, policy=ANY, relaxed=False):
    """S = B * A1 * ... * An with B an S-subsemigroup and each Ai a maximal subgroup.

    With relaxed=True a closed B holding only trivial groups (like {0, 1}) is
    accepted, and the verdict records that the relaxation was needed.
    """
    policy = _check_policy(S, policy)
    B = element_set(S, B)
    factors = [element_set(S, F) for F in factors]
    if not B:
        return Verdict(False, "B is empty")
    relaxed_used = False
    strict = len(B) < S.size and s_subsemigroup_check(S, B, policy)
    if not strict:
        idem = any(S.table[x, x] == x for x in B)
        if relaxed and is_closed(S, B) and idem:
            relaxed_used = True
        else:
            return Verdict(False, "B is not a Smarandache subsemigroup")
    maximal = {g.members for g in maximal_subgroups(S, policy)}
    for F in factors:
        if F not in maximal:
            return Verdict(False, f"factor {list(F)} is not a maximal subgroup", relaxed_used)
    if not internal_product_check(S, [B] + factors):
        return Verdict(False, "the product does not cover S", relaxed_used)
    return Verdict(True, "", relaxed_used)


@dataclass(frozen=True)
class ProductDecomposition:
    factors: tuple
    kind: str
    b_factor: tuple | None
    verified: bool
    construction: str = "complement"


def find_strong_decomposition(S, policy=ANY):
    """B = (S minus the maximal subgroups through 1) plus 1, times those subgroups.

    When that B holds no nontrivial group (Z_p gives {0, 1}) the smallest
    closure of B with one embedded subgroup that verifies is used instead.
    """
    policy = _check_policy(S, policy)
    if S.identity is None:
        raise PreconditionError(f"{S.name} has no identity")
    factors = [g.members for g in maximal_subgroups(S, policy) if S.identity in g.members]
    if not factors:
        return None
    covered = set().union(*factors)
    B = tuple(sorted((set(range(S.size)) - covered) | {S.identity}))
    if len(B) < S.size and strong_internal_product_check(S, B, factors, policy):
        return ProductDecomposition(tuple(factors), "strong-internal", B, True)
    grown = {closure(S, set(B) | set(K.members)) for K in all_subgroups(S, policy)}
    for cand in sorted(grown, key=lambda c: (len(c), c)):
        if len(cand) < S.size and strong_internal_product_check(S, cand, factors, policy):
            return ProductDecomposition(tuple(factors), "strong-internal", cand, True, "augmented")
    return None


def _product_all(semigroups):
    P = semigroups[0]
    for T in semigroups[1:]:
        P = direct_product(P, T)
    return P


def _tuple_index(sizes, parts):
    idx = 0
    for n, v in zip(sizes, parts):
        idx = idx * n + v
    return idx


def s_direct_product_check(factor_semigroups, policy=ANY):
    """The product has a single maximal subgroup, namely the product of the factors' ones."""
    if not factor_semigroups:
        raise PreconditionError("need at least one factor")
    uniques = []
    for k, T in enumerate(factor_semigroups):
        groups = maximal_subgroups(T, policy)
        if len(groups) != 1:
            return Verdict(False, f"factor {k} ({T.name}) has {len(groups)} maximal subgroups",
                           details={"violating_factor": k})
        uniques.append(groups[0].members)
    P = _product_all(list(factor_semigroups))
    found = maximal_subgroups(P, policy)
    sizes = [T.size for T in factor_semigroups]
    expected = tuple(sorted(_tuple_index(sizes, parts) for parts in itertools.product(*uniques)))
    details = {"product": P, "maximal": [g.members for g in found]}
    if len(found) != 1:
        return Verdict(False, f"the product has {len(found)} maximal subgroups", details=details)
    if found[0].members != expected:
        return Verdict(False, "the maximal subgroup is not the product of the factors'", details=details)
    return Verdict(True, details=details)


def _lookup(mapping, x):
    try:
        return int(mapping[x])
    except (KeyError, IndexError):
        raise PreconditionError(f"map is not defined at element {x}") from None


def s_homomorphism_check(S, S2, mapping, A, A2, isomorphism=False):
    """phi(A) lies in A2 and phi is multiplicative on A (bijective onto A2 when asked)."""
    for x in range(S.size):
        y = _lookup(mapping, x)
        if not 0 <= y < S2.size:
            raise PreconditionError(f"map sends {x} outside the target")
    image = [_lookup(mapping, x) for x in A.members]
    if not set(image) <= set(A2.members):
        return False
    for x in A.members:
        for y in A.members:
            if _lookup(mapping, S.mul(x, y)) != S2.mul(_lookup(mapping, x), _lookup(mapping, y)):
                return False
    if isomorphism:
        return len(set(image)) == A.order and set(image) == set(A2.members)
    return True


def cayley_s_embedding(S, A):
    """(N, map) with N = |A| and the regular representation of A in S(N)."""
    rep = regular_representation(A)
    if not verify_representation(A, rep):
        raise AssertionError("regular representation failed to verify")
    return A.order, rep
