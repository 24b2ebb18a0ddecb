"""Idempotents, group H-classes and every group embedded in a finite semigroup."""
import enum
import weakref
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import EnumerationLimitError, PreconditionError
from .semigroup import element_set, is_closed

DEFAULT_MAX_GROUP_ORDER = 720


class IdentityPolicy(str, enum.Enum):
    ANY_IDEMPOTENT = "any-idempotent"
    GLOBAL_IDENTITY_ONLY = "global-identity-only"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower().replace("_", "-"))
        except ValueError:
            raise PreconditionError(f"unknown identity policy {value!r}") from None


ANY = IdentityPolicy.ANY_IDEMPOTENT
GLOBAL = IdentityPolicy.GLOBAL_IDENTITY_ONLY


@dataclass(frozen=True, eq=False)
class EmbeddedGroup:
    parent: object
    members: tuple
    identity: int
    inverses: dict = field(repr=False)

    @property
    def order(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.inverses

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def inverse(self, x):
        return self.inverses[x]

    def mul(self, x, y):
        return int(self.parent.table[x, y])

    def labels(self):
        return [self.parent.labels[i] for i in self.members]

    def local_table(self):
        """Table over positions 0..order-1 in members order."""
        idx = np.asarray(self.members, dtype=np.int64)
        pos = np.full(self.parent.size, -1, dtype=np.int64)
        pos[idx] = np.arange(idx.size)
        return pos[self.parent.table[np.ix_(idx, idx)]]

    def is_subgroup_of(self, other):
        return self.parent is other.parent and set(self.members) <= set(other.members)


_hclass_cache = weakref.WeakKeyDictionary()
_lattice_cache = {}


def _check_policy(S, policy):
    policy = IdentityPolicy.parse(policy)
    if policy is GLOBAL and S.identity is None:
        raise PreconditionError(f"{S.name} has no identity, so global-identity-only does not apply")
    return policy


def idempotents(S):
    diag = np.diagonal(S.table)
    return tuple(int(v) for v in np.flatnonzero(diag == np.arange(S.size)))


def maximal_subgroup_at(S, e):
    """The group of units of the local monoid e*S*e."""
    e = int(e)
    if not 0 <= e < S.size or S.table[e, e] != e:
        raise PreconditionError(f"element {e} is not an idempotent of {S.name}")
    cache = _hclass_cache.setdefault(S, {})
    if e in cache:
        return cache[e]
    T = S.table
    local = np.unique(T[T[e, :], e])
    sub = T[np.ix_(local, local)]
    both = (sub == e) & (sub.T == e)
    units = both.any(axis=1)
    members = tuple(int(v) for v in local[units])
    inverses = {int(local[i]): int(local[np.flatnonzero(both[i])[0]]) for i in np.flatnonzero(units)}
    grp = EmbeddedGroup(S, members, e, inverses)
    cache[e] = grp
    return grp


def h_classes(S):
    """Maximal subgroup at every idempotent, keyed by the idempotent."""
    return {e: maximal_subgroup_at(S, e) for e in idempotents(S)}


def _bits(indices):
    out = 0
    for i in indices:
        out |= 1 << int(i)
    return out


def _mask_of(bits, n):
    return np.array([(bits >> i) & 1 for i in range(n)], dtype=np.bool_)


def _indices(bits):
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def _lattice(local, ident):
    """Every subgroup of the group with table `local`, as bitmasks.

    Begins with the cyclic subgroups and closes under joining with a cyclic
    subgroup; in a finite group every subgroup is such an iterated join.
    """
    key = (local.shape[0], ident, local.tobytes())
    if key in _lattice_cache:
        return _lattice_cache[key]
    n = local.shape[0]
    table = np.ascontiguousarray(local, dtype=np.int64)
    cyclic = {}
    for x in range(n):
        powers, p = [x], x
        while p != ident:
            p = int(table[p, x])
            powers.append(p)
        cyclic.setdefault(_bits(powers), x)
    found = set(cyclic)
    found.add(1 << ident)
    frontier = list(found)
    while frontier:
        fresh = []
        for h in frontier:
            for c, gen in cyclic.items():
                if c & ~h == 0:
                    continue
                seed = _mask_of(h | c, n)
                j = _bits(np.flatnonzero(_kernels.closure_mask(table, seed)))
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    result = sorted(found, key=lambda b: (bin(b).count("1"), _indices(b)))
    if len(_lattice_cache) > 256:
        _lattice_cache.clear()
    _lattice_cache[key] = result
    return result


def _restrict(G, members):
    members = tuple(sorted(members))
    return EmbeddedGroup(G.parent, members, G.identity, {x: G.inverses[x] for x in members})


def subgroups_of(G, min_size=1, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    """All subgroups of an embedded group, G itself included."""
    if G.order > max_group_order:
        raise EnumerationLimitError(
            f"group at idempotent {G.parent.labels[G.identity]} has order {G.order}, "
            f"above the enumeration cap of {max_group_order}")
    local = G.local_table()
    ident = G.members.index(G.identity)
    out = []
    for bits in _lattice(local, ident):
        idx = _indices(bits)
        if len(idx) >= min_size:
            out.append(_restrict(G, [G.members[i] for i in idx]))
    return out


def _canonical(groups):
    return sorted(groups, key=lambda g: (g.order, g.members))


def _eligible_idempotents(S, policy):
    if policy is GLOBAL:
        return (S.identity,)
    return idempotents(S)


def all_subgroups(S, policy=ANY, min_size=2, proper_only=True,
                  max_group_order=DEFAULT_MAX_GROUP_ORDER):
    policy = _check_policy(S, policy)
    cache = _hclass_cache.setdefault(S, {})
    key = ("all", policy, min_size, proper_only, max_group_order)
    if key in cache:
        return list(cache[key])
    out = []
    for e in _eligible_idempotents(S, policy):
        H = maximal_subgroup_at(S, e)
        if H.order < min_size:
            continue
        for K in subgroups_of(H, min_size, max_group_order):
            if proper_only and K.order == S.size:
                continue
            out.append(K)
    out = _canonical(out)
    cache[key] = tuple(out)
    return out


def maximal_subgroups(S, policy=ANY, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    """Nontrivial proper subgroups that are maximal under inclusion."""
    policy = _check_policy(S, policy)
    classes = [maximal_subgroup_at(S, e) for e in _eligible_idempotents(S, policy)]
    if all(H.order < S.size for H in classes):
        # every subgroup lies in the H-class of its identity
        return _canonical(H for H in classes if H.order >= 2)
    groups = all_subgroups(S, policy, 2, True, max_group_order)
    sets = [set(g.members) for g in groups]
    return [g for g, s in zip(groups, sets) if not any(s < t for t in sets)]


def largest_subgroups(S, policy=ANY, max_group_order=DEFAULT_MAX_GROUP_ORDER):
    groups = maximal_subgroups(S, policy, max_group_order)
    if not groups:
        return []
    top = max(g.order for g in groups)
    return [g for g in groups if g.order == top]


def subgroup_check(S, subset):
    """The subset as an EmbeddedGroup if it is a group under S's product, else None."""
    members = element_set(S, subset)
    if not members:
        raise PreconditionError("subgroup_check needs a nonempty subset")
    if not is_closed(S, members):
        return None
    T = S.table
    idem = [x for x in members if T[x, x] == x]
    if len(idem) != 1:
        return None
    e = idem[0]
    idx = np.asarray(members)
    if not ((T[e, idx] == idx).all() and (T[idx, e] == idx).all()):
        return None
    sub = T[np.ix_(idx, idx)]
    both = (sub == e) & (sub.T == e)
    if not both.any(axis=1).all():
        return None
    inverses = {int(idx[i]): int(idx[np.flatnonzero(both[i])[0]]) for i in range(idx.size)}
    return EmbeddedGroup(S, members, e, inverses)


def as_group(S):
    """S itself as an EmbeddedGroup; S must be a group."""
    G = subgroup_check(S, range(S.size))
    if G is None:
        raise PreconditionError(f"{S.name} is not a group")
    return G


def group_from(S, members):
    G = subgroup_check(S, members)
    if G is None:
        raise PreconditionError(f"{sorted(members)} is not a subgroup of {S.name}")
    return G
