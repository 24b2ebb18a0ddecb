"""The Smarandache taxonomy of a finite semigroup, with witnesses."""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .cosets import is_pseudo_simple
from .errors import PreconditionError
from .groups import element_order, is_abelian, is_cyclic, prime_factors
from .semigroup import closure, element_set, is_closed
from .subgroups import (
    ANY,
    GLOBAL,
    DEFAULT_MAX_GROUP_ORDER,
    _check_policy,
    _eligible_idempotents,
    all_subgroups,
    largest_subgroups,
    maximal_subgroup_at,
    maximal_subgroups,
)

EXHAUSTIVE_HYPER_LIMIT = 12

LAGRANGE = "lagrange"
WEAKLY_LAGRANGE = "weakly-lagrange"
NON_LAGRANGE = "non-lagrange"


def is_s_semigroup(S, policy=ANY, min_size=2, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    """(flag, smallest witness group or None)."""
    groups = all_subgroups(S, policy, min_size, True, max_group_order)
    return bool(groups), (groups[0] if groups else None)


@dataclass(frozen=True)
class SylowDetail:
    prime: int
    divides_order: bool
    s_p_sylow_subgroups: tuple = ()
    non_p_sylow_subgroups: tuple = ()


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def sylow_analysis(S, policy=ANY, primes=None, min_size=2, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    """Per-prime p-power subgroups.

    Without explicit primes, covers the primes dividing o(S) and those dividing
    some subgroup order; other primes below o(S) have nothing to report.
    """
    groups = all_subgroups(S, policy, min_size, True, max_group_order)
    if primes is None:
        pool = set(prime_factors(S.size))
        for g in groups:
            pool.update(prime_factors(g.order))
        primes = pool
    out = []
    for p in sorted(set(primes)):
        if p > S.size:
            continue
        ppow = tuple(g for g in groups if g.order > 1 and _is_power_of(g.order, p))
        if S.size % p == 0:
            out.append(SylowDetail(p, True, ppow, ()))
        else:
            out.append(SylowDetail(p, False, (), ppow if p < S.size else ()))
    return out


def is_p_sylow_semigroup(S, policy=ANY, **kw):
    details = sylow_analysis(S, policy, prime_factors(S.size), **kw)
    return all(d.s_p_sylow_subgroups for d in details if d.divides_order)


@dataclass(frozen=True)
class CauchyElement:
    element: int
    order: int
    is_cauchy: bool


def cauchy_elements(S, policy=ANY, min_size=2):
    """Non-identity elements of embedded groups with their orders."""
    policy = _check_policy(S, policy)
    out = []
    for e in _eligible_idempotents(S, policy):
        H = maximal_subgroup_at(S, e)
        for x in H.members:
            if x == e:
                continue
            r = element_order(H, x)
            if r < min_size or r == S.size:
                continue      # <x> must be a proper group of admissible size
            out.append(CauchyElement(x, r, S.size % r == 0))
    return sorted(out, key=lambda c: c.element)


def is_cauchy_semigroup(S, policy=ANY, min_size=2):
    elems = cauchy_elements(S, policy, min_size)
    return bool(elems) and all(c.is_cauchy for c in elems)


def is_hyper_subsemigroup(S, subset, policy=ANY, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    members = element_set(S, subset)
    if not members or len(members) >= S.size or not is_closed(S, members):
        return False
    have = set(members)
    return any(set(L.members) < have for L in largest_subgroups(S, policy, max_group_order))


def _hyper_candidates(S, largest):
    found = set()
    for L in largest:
        base = set(L.members)
        for x in range(S.size):
            if x not in base:
                found.add(closure(S, base | {x}))
        if S.zero is not None and S.zero not in base:
            found.add(tuple(sorted(base | {S.zero})))
    return found


def _hyper_exhaustive(S, largest):
    found = set()
    for L in largest:
        rest = [x for x in range(S.size) if x not in L.members]
        for k in range(1, len(rest)):
            for extra in itertools.combinations(rest, k):
                cand = tuple(sorted(L.members + extra))
                if is_closed(S, cand):
                    found.add(cand)
    return found


def hyper_subsemigroups(S, policy=ANY, exhaustive=None, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    """Proper closed subsets strictly containing a largest subgroup.

    Small semigroups (or exhaustive=True) get every such subset.  Otherwise
    the minimal ones closure(L + x) plus L + zero are returned; any hyper
    subsemigroup contains one of these, so emptiness is decided exactly.
    """
    largest = largest_subgroups(S, policy, max_group_order)
    if exhaustive is None:
        exhaustive = S.size <= EXHAUSTIVE_HYPER_LIMIT
    found = _hyper_exhaustive(S, largest) if exhaustive else _hyper_candidates(S, largest)
    found = {c for c in found if len(c) < S.size}
    return sorted(found, key=lambda c: (len(c), c))


def is_s_simple(S, policy=ANY, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    largest = largest_subgroups(S, policy, max_group_order)
    return not any(len(c) < S.size for c in _hyper_candidates(S, largest))


def s_subsemigroup_check(S, subset, policy=ANY):
    """Closed proper subset holding a group of order >= 2 that is a proper subset of it."""
    policy = _check_policy(S, policy)
    members = element_set(S, subset)
    if not members:
        raise PreconditionError("subset must be nonempty")
    if len(members) >= S.size:
        raise PreconditionError("subset must be a proper subset")
    if not is_closed(S, members):
        return False
    have = set(members)
    allowed = set(_eligible_idempotents(S, policy))
    for e in members:
        if e not in allowed or S.table[e, e] != e:
            continue
        # a closed piece of a finite group is a subgroup
        k = len(have.intersection(maximal_subgroup_at(S, e).members))
        if k >= 2 and (k < len(members) or not _is_prime_order(k)):
            return True
    return False


def _is_prime_order(k):
    return prime_factors(k) == [k]


def lagrange_class(S, groups):
    divides = [g for g in groups if S.size % g.order == 0]
    if groups and len(divides) == len(groups):
        return LAGRANGE
    return WEAKLY_LAGRANGE if divides else NON_LAGRANGE


@dataclass
class ClassificationReport:
    order: int
    policy: str
    min_size: int
    is_s_semigroup: bool
    witness: object = None
    subgroups: tuple = ()
    s_commutative: bool | None = None
    s_commutative_counterexample: object = None
    s_weakly_commutative: bool | None = None
    s_weakly_commutative_witness: object = None
    s_cyclic: bool | None = None
    s_cyclic_counterexample: object = None
    s_weakly_cyclic: bool | None = None
    s_weakly_cyclic_witness: object = None
    lagrange_class: str | None = None
    lagrange_dividing: object = None
    lagrange_non_dividing: object = None
    is_p_sylow_semigroup: bool | None = None
    sylow: tuple = ()
    is_cauchy_semigroup: bool | None = None
    cauchy: tuple = ()
    is_s_simple: bool | None = None
    hyper_witness: object = None
    is_pseudo_simple: bool | None = None
    is_s_maximal: bool | None = None
    maximal: tuple = ()
    largest: tuple = ()
    extra: dict = field(default_factory=dict)


def _first(groups, pred):
    return next((g for g in groups if pred(g)), None)


def classify(S, policy=ANY, min_size=2, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    policy = _check_policy(S, policy)
    groups = all_subgroups(S, policy, min_size, True, max_group_order)
    rep = ClassificationReport(S.size, policy.value, min_size, bool(groups))
    if not groups:
        return rep
    rep.witness = groups[0]
    rep.subgroups = tuple(groups)
    abelian = {g: is_abelian(g) for g in groups}
    cyclic = {g: is_cyclic(g) for g in groups}
    rep.s_commutative_counterexample = _first(groups, lambda g: not abelian[g])
    rep.s_commutative = rep.s_commutative_counterexample is None
    rep.s_weakly_commutative_witness = _first(groups, lambda g: abelian[g])
    rep.s_weakly_commutative = rep.s_weakly_commutative_witness is not None
    rep.s_cyclic_counterexample = _first(groups, lambda g: not cyclic[g])
    rep.s_cyclic = rep.s_cyclic_counterexample is None
    rep.s_weakly_cyclic_witness = _first(groups, lambda g: cyclic[g])
    rep.s_weakly_cyclic = rep.s_weakly_cyclic_witness is not None
    rep.lagrange_class = lagrange_class(S, groups)
    rep.lagrange_dividing = _first(groups, lambda g: S.size % g.order == 0)
    rep.lagrange_non_dividing = _first(groups, lambda g: S.size % g.order != 0)
    rep.sylow = tuple(sylow_analysis(S, policy, None, min_size, max_group_order))
    rep.is_p_sylow_semigroup = all(d.s_p_sylow_subgroups for d in rep.sylow if d.divides_order)
    rep.cauchy = tuple(cauchy_elements(S, policy, min_size))
    rep.is_cauchy_semigroup = bool(rep.cauchy) and all(c.is_cauchy for c in rep.cauchy)
    rep.maximal = tuple(maximal_subgroups(S, policy, max_group_order))
    rep.largest = tuple(largest_subgroups(S, policy, max_group_order))
    hyper = sorted((c for c in _hyper_candidates(S, rep.largest) if len(c) < S.size),
                   key=lambda c: (len(c), c))
    rep.is_s_simple = not hyper
    rep.hyper_witness = hyper[0] if hyper else None
    rep.is_pseudo_simple = is_pseudo_simple(S, policy, min_size, max_group_order)
    rep.is_s_maximal = len(rep.maximal) == 1
    return rep


__all__ = [
    "ANY", "GLOBAL", "LAGRANGE", "WEAKLY_LAGRANGE", "NON_LAGRANGE",
    "ClassificationReport", "SylowDetail", "CauchyElement",
    "is_s_semigroup", "classify", "sylow_analysis", "is_p_sylow_semigroup",
    "cauchy_elements", "is_cauchy_semigroup", "hyper_subsemigroups",
    "is_hyper_subsemigroup", "is_s_simple", "s_subsemigroup_check", "lagrange_class",
]
