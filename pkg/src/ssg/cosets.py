"""Cosets of embedded groups, double cosets, normal subgroups and quotients."""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import PreconditionError
from .subgroups import ANY, all_subgroups

LEFT, RIGHT = "left", "right"


def _side(side):
    side = str(side).lower()
    if side not in (LEFT, RIGHT):
        raise PreconditionError(f"side must be 'left' or 'right', got {side!r}")
    return side


def _coset_rows(S, A, side):
    """Row x marks xA (left) or Ax (right)."""
    idx = np.asarray(A.members, dtype=np.int64)
    prods = S.table[:, idx] if side == LEFT else S.table[idx, :].T
    rows = np.zeros((S.size, S.size), dtype=np.bool_)
    np.put_along_axis(rows, prods.astype(np.int64), True, axis=1)
    return rows


def s_coset(S, A, x, side=LEFT):
    """xA = {x*h} for side 'left', Ax = {h*x} for side 'right'."""
    side = _side(side)
    prods = (S.table[x, list(A.members)] if side == LEFT
             else S.table[list(A.members), x])
    return tuple(sorted({int(v) for v in prods}))


def _distinct_rows(rows):
    """Distinct row sets in order of first representative."""
    classes, reps, seen = [], [], {}
    for x in range(rows.shape[0]):
        key = rows[x].tobytes()
        if key not in seen:
            seen[key] = len(classes)
            classes.append(tuple(int(v) for v in np.flatnonzero(rows[x])))
            reps.append(x)
    return classes, reps


def _disjoint_and_cover(classes, size):
    count = np.zeros(size, dtype=np.int64)
    for c in classes:
        count[list(c)] += 1
    return bool((count <= 1).all()), bool((count >= 1).all())


@dataclass(frozen=True)
class CosetPartitionReport:
    subgroup: object
    side: str
    classes: tuple
    representatives: tuple
    is_disjoint: bool
    covers: bool
    uniform: bool
    class_sizes: tuple

    @property
    def is_partition(self):
        return self.is_disjoint and self.covers


def coset_partition_report(S, A, side=LEFT):
    side = _side(side)
    classes, reps = _distinct_rows(_coset_rows(S, A, side))
    order = sorted(range(len(classes)), key=lambda i: (len(classes[i]), classes[i]))
    classes = tuple(classes[i] for i in order)
    reps = tuple(reps[i] for i in order)
    disjoint, covers = _disjoint_and_cover(classes, S.size)
    sizes = tuple(sorted(len(c) for c in classes))
    return CosetPartitionReport(A, side, classes, reps, disjoint, covers,
                                len(set(sizes)) == 1, sizes)


def double_coset(S, A, B, x):
    rows = _kernels.double_coset_rows(S.table, A.members, B.members)
    return tuple(int(v) for v in np.flatnonzero(rows[x]))


@dataclass(frozen=True)
class DoubleCosetReport:
    A: object
    B: object
    classes: tuple
    representatives: tuple
    is_disjoint: bool
    covers: bool
    reflexive: bool
    symmetric: bool
    transitive: bool
    failures: tuple

    @property
    def is_s_equivalence(self):
        return not self.failures


def double_coset_report(S, A, B):
    """The relation y ~ x iff y in AxB, with each equivalence condition checked on its own."""
    rel = _kernels.double_coset_rows(S.table, A.members, B.members)  # rel[x, y]: y in AxB
    classes, reps = _distinct_rows(rel)
    disjoint, covers = _disjoint_and_cover(classes, S.size)
    reflexive = bool(np.diagonal(rel).all())
    symmetric = bool(np.array_equal(rel, rel.T))
    r = rel.astype(np.int64)
    # x~y and y~z must give x~z
    transitive = bool(not ((r @ r > 0) & ~rel).any())
    failures = tuple(name for name, ok in (
        ("reflexive", reflexive), ("symmetric", symmetric), ("transitive", transitive),
        ("disjoint", disjoint), ("covers", covers)) if not ok)
    return DoubleCosetReport(A, B, tuple(classes), tuple(reps), disjoint, covers,
                             reflexive, symmetric, transitive, failures)


def is_s_normal(S, A):
    """For every x, xA and Ax both lie in A, or both collapse to {zero}."""
    left = _coset_rows(S, A, LEFT)
    right = _coset_rows(S, A, RIGHT)
    inside = np.zeros(S.size, dtype=np.bool_)
    inside[list(A.members)] = True
    contained = ~(left & ~inside).any(axis=1) & ~(right & ~inside).any(axis=1)
    if S.zero is not None:
        only_zero = np.zeros(S.size, dtype=np.bool_)
        only_zero[S.zero] = True
        collapsed = (left == only_zero).all(axis=1) & (right == only_zero).all(axis=1)
        contained |= collapsed
    return bool(contained.all())


def s_normal_subgroups(S, policy=ANY, min_size=2, max_group_order=720):
    return [A for A in all_subgroups(S, policy, min_size, True, max_group_order) if is_s_normal(S, A)]


def is_pseudo_simple(S, policy=ANY, min_size=2, max_group_order=720):
    return not s_normal_subgroups(S, policy, min_size, max_group_order)


@dataclass(frozen=True)
class Quotient:
    subgroup: object
    classes: tuple
    table: tuple   # table[i][j] = index of the class holding classes[i]*classes[j]

    def __len__(self):
        return len(self.classes)


def quotient(S, A):
    """S/A = {Ax}, with (Ax)(Ay) sent to the class that contains the product set."""
    if not is_s_normal(S, A):
        raise PreconditionError(f"{A.members} is not a Smarandache normal subgroup of {S.name}")
    rows = _coset_rows(S, A, RIGHT)
    classes, _ = _distinct_rows(rows)
    classes = sorted(classes, key=lambda c: (len(c), c))
    masks = []
    for c in classes:
        m = np.zeros(S.size, dtype=np.bool_)
        m[list(c)] = True
        masks.append(m)
    table = []
    for X in classes:
        row = []
        for Y in classes:
            prod = _kernels.set_product_mask(S.table, X, Y)
            hits = [k for k, m in enumerate(masks) if not (prod & ~m).any()]
            if len(hits) != 1:
                raise AssertionError(f"product of classes {X} and {Y} lies in {len(hits)} classes")
            row.append(hits[0])
        table.append(tuple(row))
    return Quotient(A, tuple(classes), tuple(table))
