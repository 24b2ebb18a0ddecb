"""Test corpus, brute-force subgroup oracle and the ledger of checked book claims."""
import itertools
import math
from dataclasses import dataclass, field

from .classify import classify, cauchy_elements
from .errors import EnumerationLimitError
from .groups import element_order, is_cyclic
from .semigroup import (
    direct_product,
    from_table,
    make_cyclic_group,
    make_full_transformation,
    make_matrix_semigroup,
    make_symmetric_group,
    make_zn_mul,
    max_order,
)
from .subgroups import ANY, GLOBAL, all_subgroups, group_from, maximal_subgroups, subgroup_check

FULL_SEARCH_LIMIT = 12
DEFAULT_BUDGET = 2_000_000


def _table(name, rows):
    return from_table(rows, name=name, meta={"kind": "table"})


def hand_tables():
    """Small non-commutative or group-free semigroups."""
    return [
        _table("left-zero-2", [[0, 0], [1, 1]]),
        _table("right-zero-3", [[0, 1, 2], [0, 1, 2], [0, 1, 2]]),
        _table("left-zero-3", [[0, 0, 0], [1, 1, 1], [2, 2, 2]]),
        _table("null-3", [[0, 0, 0], [0, 0, 0], [0, 0, 0]]),
        # 2x2 rectangular band, (i,j)(k,l) = (i,l)
        _table("rect-band-2x2", [[0, 1, 0, 1], [0, 1, 0, 1], [2, 3, 2, 3], [2, 3, 2, 3]]),
        # left-zero pair with an identity adjoined
        _table("left-zero-monoid", [[0, 1, 2], [1, 1, 1], [2, 2, 2]]),
        # Z_2 with a zero adjoined
        _table("z2-with-zero", [[0, 0, 0], [0, 1, 2], [0, 2, 1]]),
        # chain semilattice min(i, j)
        _table("chain-4", [[min(i, j) for j in range(4)] for i in range(4)]),
    ]


@dataclass
class CorpusSpec:
    zn_range: tuple = (2, 40)
    transformation_degrees: tuple = (1, 2, 3, 4)
    matrices: tuple = ((2, 2), (2, 3))
    products: tuple = (("Z_2", "Z_2"), ("Z_2", "Z_3"), ("Z_3", "Z_4"), ("Z_4", "Z_2"),
                       ("S(2)", "Z_3"), ("Z_5", "Z_5"))
    cyclic_groups: tuple = tuple(range(1, 13))
    symmetric_groups: tuple = (3, 4)
    explicit: bool = True
    size_limit: int = field(default_factory=max_order)


def default_corpus(include_s5=False, spec=None):
    spec = spec or CorpusSpec()
    if include_s5:
        spec.transformation_degrees = tuple(spec.transformation_degrees) + (5,)
    out = {}
    lo, hi = spec.zn_range
    for n in range(lo, hi + 1):
        out[f"Z_{n}"] = make_zn_mul(n)
    for d in spec.transformation_degrees:
        out[f"S({d})"] = make_full_transformation(d)
    for k, m in spec.matrices:
        S = make_matrix_semigroup(k, m)
        out[S.name] = S
    for a, b in spec.products:
        S = direct_product(out[a], out[b])
        out[S.name] = S
    for n in spec.cyclic_groups:
        out[f"C_{n}"] = make_cyclic_group(n)
    for n in spec.symmetric_groups:
        out[f"S_{n}"] = make_symmetric_group(n)
    if spec.explicit:
        for S in hand_tables():
            out[S.name] = S
    return [S for S in out.values() if S.size <= spec.size_limit]


def brute_force_subgroups(S, max_subset_size=None, budget=DEFAULT_BUDGET):
    """Every subset up to the bound that is a group, found by plain subset search."""
    bound = S.size if max_subset_size is None else min(max_subset_size, S.size)
    if max_subset_size is None and S.size > FULL_SEARCH_LIMIT:
        raise EnumerationLimitError(
            f"full subset search is limited to {FULL_SEARCH_LIMIT} elements; {S.name} has {S.size}")
    work = sum(math.comb(S.size, k) for k in range(1, bound + 1))
    if work > budget:
        raise EnumerationLimitError(f"subset search over {S.name} needs {work} checks, budget {budget}")
    found = []
    for k in range(1, bound + 1):
        for subset in itertools.combinations(range(S.size), k):
            if subgroup_check(S, subset) is not None:
                found.append(subset)
    return found


# errata ledger ------------------------------------------------------------

CONFIRMED, REFUTED, AMBIGUOUS = "confirmed", "refuted", "ambiguous"


@dataclass(frozen=True)
class ErrataEntry:
    claim_id: str
    book_claim: str
    oracle_verdict: str
    status: str
    witness: object = None
    witness_ok: bool | None = None


def _is_group(S, members):
    return subgroup_check(S, members) is not None


def _ex_4_2_5():
    Z9 = make_zn_mul(9)
    found = [g.members for g in all_subgroups(Z9, ANY)]
    w = (1, 4, 7)
    verdict = f"{len(found)} subgroups of order >= 2: {found}"
    status = REFUTED if len(found) != 2 else CONFIRMED
    return ErrataEntry("Example 4.2.5", "Z_9 has only two proper subsets that are subgroups",
                       verdict, status, list(w), _is_group(Z9, w) and w in found)


def _ex_1_3_9():
    Z7 = make_zn_mul(7)
    found = [g.members for g in all_subgroups(Z7, ANY)]
    w = (1, 2, 4)
    status = REFUTED if set(found) != {(1, 6), (1, 2, 3, 4, 5, 6)} else CONFIRMED
    return ErrataEntry("Example 1.3.9", "the only proper subgroups of Z_7 are {1,6} and {1,...,6}",
                       f"subgroups found: {found}", status, list(w), _is_group(Z7, w))


def _ex_4_2_3():
    S = make_full_transformation(3)
    others = [g for g in all_subgroups(S, ANY) if g.identity != S.identity]
    w = others[0] if others else None
    status = REFUTED if others else CONFIRMED
    witness = None if w is None else {"members": w.labels(), "identity": S.labels[w.identity]}
    ok = w is not None and _is_group(S, w.members) and w.identity != S.identity
    return ErrataEntry("Example 4.2.3", "every subgroup of S(3) has the identity map as its identity",
                       f"{len(others)} subgroups have a rank-2 idempotent as identity", status, witness, ok)


def _ex_4_2_6():
    Z25 = make_zn_mul(25)
    units = group_from(Z25, [x for x in range(25) if x % 5])
    order2 = element_order(units, 2)
    status = REFUTED if is_cyclic(units) else CONFIRMED
    return ErrataEntry("Example 4.2.6", "the order-20 unit group of Z_25 is not cyclic",
                       f"element 2 has order {order2}", status, {"generator": 2, "order": order2},
                       order2 == 20)


def _ex_4_6_2():
    Z9 = make_zn_mul(9)
    rep = classify(Z9, ANY)
    w = (1, 4, 7)
    status = REFUTED if rep.lagrange_class != "non-lagrange" else CONFIRMED
    return ErrataEntry("Example 4.6.2", "Z_9 is not Smarandache weakly Lagrange",
                       f"classified as {rep.lagrange_class}", status, list(w),
                       _is_group(Z9, w) and 9 % len(w) == 0)


def _thm_5_4_4():
    Z8 = make_zn_mul(8)
    units = group_from(Z8, [1, 3, 5, 7])
    a, b = (1, 7), (1, 5)
    # conjugation inside the unit group, the only group holding both sets
    images = {tuple(sorted({Z8.product(g, h, units.inverse(g)) for h in a})) for g in units.members}
    group_reading = b in images
    status = CONFIRMED if group_reading else AMBIGUOUS
    return ErrataEntry("Theorem 5.4.4", "in Z_8, {1,7} is conjugate to {1,5} and {1,3}",
                       f"conjugates of {{1,7}} inside the unit group: {sorted(images)}; the semigroup "
                       "itself has no conjugation, so the claim has no consistent reading", status)


def _thm_6_5_1():
    S3 = make_full_transformation(3)
    Z12 = make_zn_mul(12)
    counts = {
        "S(3) any-idempotent": len(maximal_subgroups(S3, ANY)),
        "S(3) global-identity-only": len(maximal_subgroups(S3, GLOBAL)),
        "Z_12 any-idempotent": len(maximal_subgroups(Z12, ANY)),
        "Z_12 global-identity-only": len(maximal_subgroups(Z12, GLOBAL)),
    }
    split = (counts["S(3) global-identity-only"] == 1 and counts["Z_12 any-idempotent"] == 3
             and counts["S(3) any-idempotent"] != 1)
    return ErrataEntry("Theorem 6.5.1 vs Example 6.5.2",
                       "S_n is the only maximal subgroup of S(n), while Z_12 has three",
                       f"each claim holds only under a different identity policy: {counts}",
                       AMBIGUOUS if split else CONFIRMED, counts)


def _thm_4_8_1():
    flagged = {p: sum(c.is_cauchy for c in cauchy_elements(make_zn_mul(p), ANY)) for p in (5, 7, 11, 13)}
    status = CONFIRMED if not any(flagged.values()) else REFUTED
    return ErrataEntry("Theorem 4.8.1", "no element of Z_p is a Smarandache Cauchy element",
                       f"Cauchy elements per prime: {flagged}", status)


SEED_CATALOGUE = (_ex_4_2_5, _ex_1_3_9, _ex_4_2_3, _ex_4_2_6, _ex_4_6_2, _thm_5_4_4, _thm_6_5_1,
                  _thm_4_8_1)

EXPECTED_STATUS = {
    "Example 4.2.5": REFUTED,
    "Example 1.3.9": REFUTED,
    "Example 4.2.3": REFUTED,
    "Example 4.2.6": REFUTED,
    "Example 4.6.2": REFUTED,
    "Theorem 5.4.4": AMBIGUOUS,
    "Theorem 6.5.1 vs Example 6.5.2": AMBIGUOUS,
    "Theorem 4.8.1": CONFIRMED,
}


def _thm_6_1_2():
    from .notions import s_inverse_pairs
    misses = []
    for p in (5, 7, 11, 13):
        G = make_cyclic_group(p)
        grp = subgroup_check(G, range(p))
        related = {(q.x, q.y): {q.a, q.b} for q in s_inverse_pairs(grp)}
        for k in range(1, p):
            x, y = k, p - k
            key = (min(x, y), max(x, y))
            if key not in related:
                continue
            if related[key] != {(k + 1) % p, (p - k - 1) % p}:
                misses.append((p, k))
    w = misses[0] if misses else None
    return ErrataEntry("Theorem 6.1.2", "(g^k, g^(p-k)) has related pair (g^(k+1), g^(p-k-1))",
                       f"the related pair is (g^(-2k), g^(2k)); {len(misses)} (p, k) cases differ",
                       REFUTED if misses else CONFIRMED,
                       None if w is None else {"p": w[0], "k": w[1]}, bool(misses))


def _ex_6_5_9():
    from .products import internal_product_check
    Z20 = make_zn_mul(20)
    units = [x for x in range(20) if math.gcd(x, 20) == 1]
    book_b = sorted((set(range(20)) - set(units)) | {0})
    ok = internal_product_check(Z20, [book_b, units])
    return ErrataEntry("Example 6.5.9", "Z_20 = A_1 A_2 with A_1 = (Z_20 minus units) plus {0}",
                       "that A_1 lacks 1 so the product misses every unit; adding 1 instead of 0 works",
                       CONFIRMED if ok else REFUTED, {"B": book_b}, not ok)


def _ex_6_3_3():
    from .cosets import double_coset_report
    S = make_full_transformation(3)
    A = group_from(S, [S.index_of("[1,2,3]"), S.index_of("[1,3,2]")])
    B = group_from(S, [S.index_of("[1,2,3]"), S.index_of("[3,2,1]")])
    rep = double_coset_report(S, A, B)
    return ErrataEntry("Example 6.3.3", "A x B classes give a Smarandache equivalence relation on S(3)",
                       f"{len(rep.classes)} classes, failing conditions: {list(rep.failures) or 'none'}",
                       CONFIRMED if rep.is_s_equivalence else REFUTED)


EXTRA_CATALOGUE = (_thm_6_1_2, _ex_6_5_9, _ex_6_3_3)
EXPECTED_EXTRA_STATUS = {
    "Theorem 6.1.2": REFUTED,
    "Example 6.5.9": REFUTED,
    "Example 6.3.3": CONFIRMED,
}


def run_errata_suite(include_extra=False):
    checks = SEED_CATALOGUE + (EXTRA_CATALOGUE if include_extra else ())
    return [check() for check in checks]


def errata_matches(entries):
    """(ok, mismatches) comparing statuses and refutation witnesses with the ledger."""
    expected = {**EXPECTED_STATUS, **EXPECTED_EXTRA_STATUS}
    bad = []
    for e in entries:
        if expected.get(e.claim_id) != e.status:
            bad.append(f"{e.claim_id}: expected {expected.get(e.claim_id)}, got {e.status}")
        elif e.status == REFUTED and not e.witness_ok:
            bad.append(f"{e.claim_id}: refutation witness does not verify")
    return not bad, bad
