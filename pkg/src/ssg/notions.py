"""Smarandache inverse pairs and Smarandache conjugates inside embedded groups."""
from dataclasses import dataclass

import numpy as np

from .errors import MembershipError, PreconditionError
from .groups import conjugation_matrix

INVERSE_GROUP = "inverse-group"
INVERSE_FREE = "inverse-free"
MIXED = "mixed"


@dataclass(frozen=True)
class SInversePair:
    x: int
    y: int
    a: int
    b: int
    orientation: tuple   # which of "xa=y", "ax=y", "yb=x", "by=x" hold

    @property
    def related(self):
        return (self.a, self.b)

    def swapped(self):
        """The same realization read from y's side."""
        flip = {"xa=y": "yb=x", "ax=y": "by=x", "yb=x": "xa=y", "by=x": "ax=y"}
        return SInversePair(self.y, self.x, self.b, self.a,
                            tuple(sorted(flip[o] for o in self.orientation)))


def _realizations(G, x):
    """Every (a, b, orientation) making (x, x^-1) a Smarandache inverse pair."""
    e = G.identity
    y = G.inverse(x)
    banned = {e, x, y}
    out = []
    for a in G.members:
        if a in banned:
            continue
        b = G.inverse(a)
        if b in banned:
            continue
        first = [o for o, ok in (("xa=y", G.mul(x, a) == y), ("ax=y", G.mul(a, x) == y)) if ok]
        second = [o for o, ok in (("yb=x", G.mul(y, b) == x), ("by=x", G.mul(b, y) == x)) if ok]
        if first and second:
            out.append((a, b, tuple(sorted(first + second))))
    return out


def s_inverse_pairs(G):
    """One record per unordered {x, y} and realization, listed from the smaller index."""
    if G.order < 2:
        raise PreconditionError("Smarandache inverses need a group of order at least 2")
    out = []
    for x in G.members:
        y = G.inverse(x)
        if x == G.identity or y < x:
            continue
        out.extend(SInversePair(x, y, a, b, o) for a, b, o in _realizations(G, x))
    return sorted(out, key=lambda p: (p.x, p.y, p.a, p.b))


def has_s_inverse(G, x):
    if x not in G:
        raise MembershipError(f"{x} is not in the group")
    if x == G.identity:
        raise PreconditionError("the identity is excluded from the Smarandache inverse definition")
    return bool(_realizations(G, x))


def classify_s_inverse(G):
    if G.order < 2:
        raise PreconditionError("classification needs a group of order at least 2")
    flags = [has_s_inverse(G, x) for x in G.members if x != G.identity]
    if all(flags):
        return INVERSE_GROUP
    return MIXED if any(flags) else INVERSE_FREE


def _validate(G, pair):
    x, y, a, b = pair.x, pair.y, pair.a, pair.b
    ok = (all(v in G for v in (x, y, a, b)) and G.mul(x, y) == G.identity
          and G.mul(a, b) == G.identity and not {a, b} & {G.identity, x, y}
          and (G.mul(x, a) == y or G.mul(a, x) == y)
          and (G.mul(y, b) == x or G.mul(b, y) == x))
    if not ok:
        raise PreconditionError(f"not a Smarandache inverse pair with related pair: {pair}")


def is_self_inversed_pair(G, pair):
    """(a, b) is itself an inverse pair whose related pair is (x, y)."""
    _validate(G, pair)
    target = {pair.x, pair.y}
    for side in (pair.a, pair.b):
        if side == G.identity:
            continue
        if any({ra, rb} == target for ra, rb, _ in _realizations(G, side)):
            return True
    return False


def co_inverse_check(G, pair):
    """(a, b) is a Smarandache inverse pair with some related pair."""
    _validate(G, pair)
    return bool(_realizations(G, pair.a))


@dataclass(frozen=True)
class SConjugateWitness:
    x: int
    y: int
    a: int
    reflexive: bool = False


def _conj_data(G):
    conj = conjugation_matrix(G)     # conj[g, a] = g a g^-1 by positions
    cls = np.zeros((G.order, G.order), dtype=np.bool_)
    cls[conj, np.arange(G.order)[None, :]] = True   # cls[b, a]: b ~ a
    return conj, cls


def _position(G, x):
    try:
        return G.members.index(x)
    except ValueError:
        raise MembershipError(f"{x} is not in the group") from None


def s_conjugates(G, x, include_reflexive=False):
    """Witnesses (y, a) with x = a y a^-1 where a is conjugate to both x and y."""
    i = _position(G, x)
    conj, cls = _conj_data(G)
    m = G.members
    out = []
    for j in range(G.order):
        if j == i:
            continue
        for k in np.flatnonzero(conj[:, j] == i):
            if cls[k, i] and cls[k, j]:
                out.append(SConjugateWitness(x, m[j], m[int(k)]))
    if include_reflexive:
        out.extend(reflexive_s_conjugates(G, x))
    return out


def reflexive_s_conjugates(G, x):
    """x = a x a^-1 with a outside {1, x}, a commuting with x and conjugate to it."""
    i = _position(G, x)
    conj, cls = _conj_data(G)
    ident = G.members.index(G.identity)
    return [SConjugateWitness(x, x, G.members[int(k)], True)
            for k in np.flatnonzero(conj[:, i] == i)
            if k not in (ident, i) and cls[k, i]]


def has_s_conjugate(G, x, include_reflexive=False):
    return bool(s_conjugates(G, x, include_reflexive))
