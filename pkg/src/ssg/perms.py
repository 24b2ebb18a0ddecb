"""Transformations of {1..n} and permutation cycle machinery.

Products follow "apply the left factor first": (f*g)(p) = g(f(p)).
"""
from collections import defaultdict
from dataclasses import dataclass

from .errors import PreconditionError


@dataclass(frozen=True)
class Transformation:
    images: tuple

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        n = len(imgs)
        if any(v < 1 or v > n for v in imgs):
            raise PreconditionError(f"images must lie in 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self):
        return len(self.images)

    @property
    def is_bijective(self):
        return len(set(self.images)) == len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def then(self, other):
        """Apply self, then other."""
        if other.degree != self.degree:
            raise PreconditionError("degrees differ")
        return Transformation(tuple(other.images[v - 1] for v in self.images))

    __mul__ = then

    def inverse(self):
        if not self.is_bijective:
            raise PreconditionError("transformation is not bijective")
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Transformation(tuple(inv))

    def label(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __str__(self):
        return format_cycles(self) if self.is_bijective else self.label()


def identity(degree):
    return Transformation(tuple(range(1, degree + 1)))


def from_cycles(cycles, degree=None):
    cycles = [tuple(int(p) for p in c) for c in cycles]
    points = [p for c in cycles for p in c]
    if len(points) != len(set(points)):
        raise PreconditionError(f"cycles are not disjoint: {cycles}")
    if degree is None:
        degree = max(points, default=0)
    images = list(range(1, degree + 1))
    for c in cycles:
        for p, q in zip(c, c[1:] + c[:1]):
            if not 1 <= p <= degree:
                raise PreconditionError(f"point {p} outside 1..{degree}")
            images[p - 1] = q
    return Transformation(tuple(images))


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple
    fixed_points: tuple

    def cycle_type(self):
        return tuple(sorted([len(c) for c in self.cycles] + [1] * len(self.fixed_points)))


def _as_perm(x, degree=None):
    if isinstance(x, Transformation):
        return x
    return from_cycles(x, degree)


def cycle_decomposition(t):
    if not t.is_bijective:
        raise PreconditionError("cycle decomposition needs a bijection")
    seen = set()
    cycles, fixed = [], []
    for start in range(1, t.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        p = t(start)
        while p != start:
            cyc.append(p)
            seen.add(p)
            p = t(p)
        (cycles if len(cyc) > 1 else fixed).append(tuple(cyc))
    # scanning from the smallest unseen point already yields min-first cycles in order
    return CycleDecomposition(tuple(cycles), tuple(c[0] for c in fixed))


def cycle_type(t):
    return cycle_decomposition(t).cycle_type()


def format_cycles(t):
    cycles = cycle_decomposition(t).cycles
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def conjugate_by_replacement(x, theta, degree=None):
    """Write x in cycle form and replace every point p by theta(p).

    In product form this is theta^-1 * x * theta with left-to-right composition.
    """
    x, theta = _as_perm(x, degree), _as_perm(theta, degree)
    if x.degree != theta.degree:
        raise PreconditionError("degrees differ")
    if not (x.is_bijective and theta.is_bijective):
        raise PreconditionError("both arguments must be permutations")
    cycles = cycle_decomposition(x).cycles
    return from_cycles([[theta(p) for p in c] for c in cycles], x.degree)


def _display_cycles(x, degree):
    """Cycles in the caller's order when given as a list, canonical otherwise."""
    if isinstance(x, Transformation):
        return list(cycle_decomposition(x).cycles), x.degree
    perm = from_cycles(x, degree)
    cycles = [tuple(int(p) for p in c) for c in x if len(c) > 1]
    return cycles, perm.degree


def find_conjugator(x, y, degree=None):
    """A theta with conjugate_by_replacement(x, theta) == y, or None.

    Cycles of equal length are paired in display order, fixed points in
    ascending order, which reproduces the hand construction of lining the
    two cycle forms up under each other.
    """
    xc, n = _display_cycles(x, degree)
    yc, m = _display_cycles(y, degree if degree is not None else n)
    n = max(n, m)
    xp, yp = from_cycles(xc, n), from_cycles(yc, n)
    if cycle_type(xp) != cycle_type(yp):
        return None
    by_len = defaultdict(list)
    for c in yc:
        by_len[len(c)].append(c)
    images = [0] * n
    for c in xc:
        target = by_len[len(c)].pop(0)
        for p, q in zip(c, target):
            images[p - 1] = q
    xfix = cycle_decomposition(xp).fixed_points
    yfix = cycle_decomposition(yp).fixed_points
    for p, q in zip(xfix, yfix):
        images[p - 1] = q
    theta = Transformation(tuple(images))
    assert conjugate_by_replacement(xp, theta) == yp
    return theta
