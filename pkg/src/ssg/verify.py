"""Worked-example fixtures and property suites.

Each criterion function returns a list of Check records.  The acceptance
tests and ``ssg verify`` replay the same functions.
"""
import math
from dataclasses import dataclass

from .classify import (
    LAGRANGE,
    NON_LAGRANGE,
    WEAKLY_LAGRANGE,
    cauchy_elements,
    classify,
    hyper_subsemigroups,
    is_hyper_subsemigroup,
    is_s_simple,
    s_subsemigroup_check,
    sylow_analysis,
)
from .corpus import brute_force_subgroups, default_corpus, errata_matches, run_errata_suite
from .cosets import (
    coset_partition_report,
    double_coset,
    double_coset_report,
    is_pseudo_simple,
    is_s_normal,
    quotient,
    s_coset,
    s_normal_subgroups,
)
from .groups import (
    conjugacy_analysis,
    element_order,
    is_prime,
    prime_factors,
    sylow_count_check,
)
from .notions import (
    INVERSE_FREE,
    INVERSE_GROUP,
    MIXED,
    SInversePair,
    classify_s_inverse,
    has_s_inverse,
    has_s_conjugate,
    is_self_inversed_pair,
    s_conjugates,
    s_inverse_pairs,
)
from .perms import conjugate_by_replacement, cycle_type, find_conjugator, from_cycles
from .products import (
    cayley_s_embedding,
    find_strong_decomposition,
    internal_product_check,
    s_direct_product_check,
    s_homomorphism_check,
    strong_internal_product_check,
)
from .semigroup import (
    deserialize,
    element_of,
    make_cyclic_group,
    make_full_transformation,
    make_matrix_semigroup,
    make_symmetric_group,
    make_zn_mul,
    matrix_index,
    serialize,
    transformation_of,
)
from .subgroups import (
    ANY,
    GLOBAL,
    all_subgroups,
    as_group,
    group_from,
    h_classes,
    idempotents,
    largest_subgroups,
    maximal_subgroup_at,
    maximal_subgroups,
    subgroup_check,
)


@dataclass(frozen=True)
class Check:
    label: str
    ok: bool
    detail: str = ""


class _Collector:
    def __init__(self):
        self.checks = []

    def eq(self, label, got, expected):
        self.checks.append(Check(label, got == expected, f"got {got!r}, expected {expected!r}"))

    def true(self, label, cond, detail=""):
        self.checks.append(Check(label, bool(cond), detail))


def _members(groups):
    return [g.members for g in groups]


def criterion_1():
    c = _Collector()
    Z12 = make_zn_mul(12)
    groups = all_subgroups(Z12, ANY, 2)
    c.eq("Z_12 subgroups", _members(groups),
         [(1, 5), (1, 7), (1, 11), (3, 9), (4, 8), (1, 5, 7, 11)])
    c.eq("Z_12 subgroup identities", [g.identity for g in groups], [1, 1, 1, 9, 4, 1])
    return c.checks


def criterion_2():
    c = _Collector()
    Z16 = make_zn_mul(16)
    detail = {d.prime: d for d in sylow_analysis(Z16, ANY)}
    two = detail[2]
    c.true("2 divides 16", two.divides_order)
    c.eq("orders of 2-power subgroups", sorted({g.order for g in two.s_p_sylow_subgroups}), [2, 4, 8])
    sets = set(_members(two.s_p_sylow_subgroups))
    for want in [(1, 15), (1, 3, 9, 11), (1, 5, 9, 13), (1, 3, 5, 7, 9, 11, 13, 15)]:
        c.true(f"contains {want}", want in sets)
    return c.checks


def criterion_3():
    c = _Collector()
    Z10 = make_zn_mul(10)
    c.eq("maximal subgroup at 6", maximal_subgroup_at(Z10, 6).members, (2, 4, 6, 8))
    Z12 = make_zn_mul(12)
    A12 = group_from(Z12, [3, 9])
    c.eq("Z_12: 4A", s_coset(Z12, A12, 4), (0,))
    c.eq("Z_12: 5A", s_coset(Z12, A12, 5), (3, 9))
    A = group_from(Z10, [1, 9])
    B = group_from(Z10, [2, 4, 6, 8])
    rep = coset_partition_report(Z10, A)
    c.eq("cosets of {1,9}", sorted(rep.classes), [(0,), (1, 9), (2, 8), (3, 7), (4, 6), (5,)])
    c.true("cosets of {1,9} cover, not uniform", rep.covers and rep.is_disjoint and not rep.uniform)
    c.eq("S-normal subgroups", _members(s_normal_subgroups(Z10, ANY)), [(2, 4, 6, 8)])
    c.eq("|Z_10 / B|", len(quotient(Z10, B)), 2)
    c.eq("A3B", double_coset(Z10, A, B, 3), (2, 4, 6, 8))
    c.eq("A5B", double_coset(Z10, A, B, 5), (0,))
    return c.checks


def criterion_4():
    c = _Collector()
    for p in (5, 7, 11, 13):
        Zp = make_zn_mul(p)
        rep = classify(Zp, ANY)
        c.eq(f"Z_{p} Lagrange class", rep.lagrange_class, NON_LAGRANGE)
        c.true(f"Z_{p} simple", is_s_simple(Zp, ANY))
        c.eq(f"Z_{p} Cauchy elements", [x.element for x in cauchy_elements(Zp, ANY) if x.is_cauchy], [])
        units = tuple(range(1, p))
        c.eq(f"Z_{p} largest", _members(largest_subgroups(Zp, ANY)), [units])
        c.true(f"Z_{p} units S-normal", is_s_normal(Zp, group_from(Zp, units)))
        c.true(f"Z_{p} {{1,{p - 1}}} not S-normal", not is_s_normal(Zp, group_from(Zp, [1, p - 1])))
        oracle = [s for s in brute_force_subgroups(Zp, max_subset_size=p - 1) if len(s) >= 2]
        c.eq(f"Z_{p} subgroups vs oracle", _members(all_subgroups(Zp, ANY)),
             sorted(oracle, key=lambda s: (len(s), s)))
    Z7 = make_zn_mul(7)
    c.true("Z_7 has {1,2,4} (book count refuted)", (1, 2, 4) in _members(all_subgroups(Z7, ANY)))
    return c.checks


def _s3_constants(S):
    return [S.index_of(f"[{v},{v},{v}]") for v in (1, 2, 3)]


def criterion_5():
    c = _Collector()
    S = make_full_transformation(3)
    c.eq("size", S.size, 27)
    c.eq("idempotents", len(idempotents(S)), 10)
    rep = classify(S, ANY)
    c.true("S-semigroup", rep.is_s_semigroup)
    c.true("not S-commutative", rep.s_commutative is False)
    c.true("weakly cyclic", rep.s_weakly_cyclic)
    c.eq("Lagrange class", rep.lagrange_class, WEAKLY_LAGRANGE)
    orders = {g.order for g in rep.subgroups}
    c.true("order-6 subgroup with 6 not dividing 27", 6 in orders and 27 % 6)
    c.true("order-3 subgroup with 3 dividing 27", 3 in orders and 27 % 3 == 0)
    cauchy = {x.element: x for x in cauchy_elements(S, ANY)}
    for lab in ("[1,3,2]", "[2,1,3]", "[3,2,1]"):
        x = cauchy.get(S.index_of(lab))
        c.true(f"transposition {lab} fails Cauchy", x is not None and x.order == 2 and not x.is_cauchy)
    c.true("pseudo-simple", is_pseudo_simple(S, ANY))
    units = maximal_subgroup_at(S, S.identity)
    hyper = sorted(set(units.members) | set(_s3_constants(S)))
    c.true("S_3 with constants is hyper", is_hyper_subsemigroup(S, hyper, ANY))
    glob = maximal_subgroups(S, GLOBAL)
    c.true("one maximal subgroup S_3 in global mode",
           len(glob) == 1 and glob[0].order == 6 and glob[0].members == units.members)
    B = sorted((set(range(27)) - set(units.members)) | {S.identity})
    c.true("strong decomposition", strong_internal_product_check(S, B, [units.members], ANY))
    return c.checks


def criterion_6():
    c = _Collector()
    S = make_full_transformation(2)
    c.eq("size", S.size, 4)
    rep = classify(S, ANY)
    c.eq("subgroup orders", [g.order for g in rep.subgroups], [2])
    c.eq("Lagrange class", rep.lagrange_class, LAGRANGE)
    return c.checks


def criterion_7():
    c = _Collector()
    M = make_matrix_semigroup(2, 2)
    c.eq("size", M.size, 16)
    rep = classify(M, ANY)
    c.true("not Lagrange, order-3 witness",
           rep.lagrange_class != LAGRANGE and any(g.order == 3 for g in rep.subgroups))
    c.eq("weakly Lagrange, order-2 witness", (rep.lagrange_class, rep.lagrange_dividing.order),
         (WEAKLY_LAGRANGE, 2))
    cauchy = {x.element: x for x in cauchy_elements(M, ANY)}
    uni = cauchy.get(matrix_index(M, [[1, 1], [0, 1]]))
    c.true("unipotent matrix is Cauchy", uni is not None and uni.order == 2 and uni.is_cauchy)
    g3 = cauchy.get(matrix_index(M, [[0, 1], [1, 1]]))
    c.true("order-3 matrix is not Cauchy", g3 is not None and g3.order == 3 and not g3.is_cauchy)
    ident = matrix_index(M, [[1, 0], [0, 1]])
    C = group_from(M, [ident, matrix_index(M, [[0, 1], [1, 1]]), matrix_index(M, [[1, 1], [1, 0]])])
    rc = coset_partition_report(M, C, "left")
    zero_class = [cl for cl in rc.classes if len(cl) == 1]
    c.eq("C classes", (rc.class_sizes, zero_class), ((1, 3, 3, 3, 3, 3), [(M.zero,)]))
    D = group_from(M, [ident, matrix_index(M, [[0, 1], [1, 0]])])
    c.eq("D class sizes", list(coset_partition_report(M, D, "left").class_sizes),
         [1, 1, 1, 1, 2, 2, 2, 2, 2, 2])
    return c.checks


def _corpus_groups(corpus=None, max_order=120):
    """Every nontrivial group H-class of the corpus, deduplicated by table."""
    seen, out = set(), []
    for S in corpus or default_corpus():
        for H in h_classes(S).values():
            if 2 <= H.order <= max_order:
                key = H.local_table().tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(H)
    return out


def criterion_8():
    c = _Collector()
    c.eq("S_3", classify_s_inverse(as_group(make_symmetric_group(3))), INVERSE_FREE)
    for p in (5, 7, 11, 13):
        G = as_group(make_cyclic_group(p))
        c.eq(f"C_{p}", classify_s_inverse(G), INVERSE_GROUP)
        related = {(q.x, q.y): {q.a, q.b} for q in s_inverse_pairs(G)}
        c.eq(f"C_{p} k=1 related pair", related.get((1, p - 1)), {2, p - 2})
        pattern = all(related[(min(k, p - k), max(k, p - k))] == {(2 * k) % p, (-2 * k) % p}
                      for k in range(1, p))
        c.true(f"C_{p} related pairs are (g^-2k, g^2k)", pattern)
    C6 = as_group(make_cyclic_group(6))
    pairs = s_inverse_pairs(C6)
    c.eq("C_6 pairs", [((q.x, q.y), {q.a, q.b}) for q in pairs], [((1, 5), {2, 4})])
    c.true("g^3 excluded", not has_s_inverse(C6, 3))
    Z5 = make_zn_mul(5)
    U5 = group_from(Z5, [1, 2, 3, 4])
    c.eq("Z_5 pairs", [(q.x, q.y, q.a, q.b) for q in s_inverse_pairs(U5)], [(2, 3, 4, 4)])
    c.true("4 excluded", not has_s_inverse(U5, 4))
    bad = [(G.parent.name, x) for G in _corpus_groups()
           for x in G.members if x != G.identity and element_order(G, x) == 2 and has_s_inverse(G, x)]
    c.eq("order-2 elements with S-inverse", bad, [])
    C25 = as_group(make_cyclic_group(25))
    pair = SInversePair(20, 5, 10, 15, ("xa=y", "yb=x"))
    c.true("C_25 self-inversed pair", is_self_inversed_pair(C25, pair))
    c.eq("S_4", classify_s_inverse(as_group(make_symmetric_group(4))), MIXED)
    return c.checks


def criterion_9():
    c = _Collector()
    S3 = make_symmetric_group(3)
    G = as_group(S3)
    p1, p2, p3, p4 = (S3.index_of(x) for x in ("(2,3)", "(1,3)", "(1,2)", "(1,2,3)"))
    c.true("p1 ~ p3 via p2", any(w.y == p3 and w.a == p2 for w in s_conjugates(G, p1)))
    c.true("p4 has none", not has_s_conjugate(G, p4))
    x = from_cycles([(5, 6, 7), (3, 4, 2)], 7)
    theta = from_cycles([(1, 2, 3), (4, 7)], 7)
    c.eq("replacement example", conjugate_by_replacement(x, theta), from_cycles([(5, 6, 4), (1, 7, 3)], 7))
    c.eq("replacement equals theta^-1 x theta", theta.inverse() * x * theta, conjugate_by_replacement(x, theta))
    xs, ys = [(1, 2), (3, 4, 5), (6, 7, 8)], [(7, 5), (1, 3, 6), (2, 4, 8)]
    th = find_conjugator(xs, ys, 8)
    c.eq("book conjugator", th.images, (7, 5, 1, 3, 6, 2, 4, 8))
    c.eq("second replacement example", conjugate_by_replacement(xs, th, 8), from_cycles(ys, 8))
    S4 = make_symmetric_group(4)
    G4 = as_group(S4)
    mismatched = []
    count = 0
    for xi in G4.members:
        for w in s_conjugates(G4, xi, include_reflexive=True):
            count += 1
            types = {cycle_type(transformation_of(S4, v)) for v in (w.x, w.y, w.a)}
            if len(types) != 1:
                mismatched.append(w)
    c.true("S_4 witnesses share cycle type", count > 0 and not mismatched, f"{count} witnesses")
    return c.checks


def criterion_10():
    c = _Collector()
    Z7 = make_zn_mul(7)
    c.true("Z_7 = {0,1} units", internal_product_check(Z7, [[0, 1], range(1, 7)]))
    v = strong_internal_product_check(Z7, [0, 1], [range(1, 7)], ANY, relaxed=True)
    c.true("Z_7 strong form needs the relaxed B", v.ok and v.relaxed_b)
    Z6 = make_zn_mul(6)
    c.true("Z_6 three factors", internal_product_check(Z6, [[1, 3, 0], [1, 5], [1, 2, 4]]))
    Z12 = make_zn_mul(12)
    c.true("Z_12 = A1 {1,5,7,11}",
           strong_internal_product_check(Z12, [0, 1, 2, 3, 4, 6, 8, 9, 10], [[1, 5, 7, 11]], ANY))
    Z20 = make_zn_mul(20)
    units = tuple(x for x in range(20) if math.gcd(x, 20) == 1)
    dec = find_strong_decomposition(Z20, ANY)
    c.true("Z_20 strong decomposition",
           dec is not None and dec.factors == (units,)
           and dec.b_factor == tuple(sorted((set(range(20)) - set(units)) | {1})))
    c.true("Z_20 B holds {5,15}", dec is not None and subgroup_check(Z20, [5, 15]) is not None
           and {5, 15} <= set(dec.b_factor))
    S3 = make_full_transformation(3)
    c.true("S(3) x Z_6 fails", not s_direct_product_check([S3, Z6], ANY))
    return c.checks


def criterion_11():
    c = _Collector()
    Z12, Z7 = make_zn_mul(12), make_zn_mul(7)
    phi = {x: 0 for x in range(12)}
    phi.update({1: 1, 11: 6})
    A, A2 = group_from(Z12, [1, 11]), group_from(Z7, [1, 6])
    c.true("Z_12 -> Z_7 S-isomorphism", s_homomorphism_check(Z12, Z7, phi, A, A2, isomorphism=True))
    for G in all_subgroups(Z12, ANY):
        n, rep = cayley_s_embedding(Z12, G)
        SN = make_full_transformation(n)
        perms = maximal_subgroup_at(SN, SN.identity)
        img = {x: element_of(SN, rep[x]) for x in G.members}
        mapping = {x: img.get(x, SN.identity) for x in range(12)}
        ok = (n == G.order and len(set(img.values())) == n
              and s_homomorphism_check(Z12, SN, mapping, G, perms))
        c.true(f"Cayley embedding of {G.members}", ok)
    return c.checks


def property_oracle_equivalence(corpus):
    c = _Collector()
    for S in corpus:
        if S.size > 10:
            continue
        engine = _members(all_subgroups(S, ANY, 1, False))
        oracle = sorted(brute_force_subgroups(S), key=lambda s: (len(s), s))
        c.eq(f"{S.name} H-class vs exhaustive", engine, oracle)
    return c.checks


def property_group_theory(corpus):
    c = _Collector()
    for G in _corpus_groups(corpus):
        name = f"{G.parent.name} at {G.parent.labels[G.identity]}"
        rep = conjugacy_analysis(G)
        total = len(rep.center) + sum(G.order // rep.normalizer_orders[cl[0]]
                                      for cl in rep.classes if len(cl) > 1)
        c.eq(f"class equation {name}", total, G.order)
        for p in prime_factors(G.order):
            c.true(f"Sylow {p} count {name}", sylow_count_check(G, p))
    return c.checks


def property_classifier(corpus):
    c = _Collector()
    for S in corpus:
        if S.size > 256:
            continue
        rep = classify(S, ANY)
        if not rep.is_s_semigroup:
            continue
        c.true(f"{S.name} cyclic implies commutative", not rep.s_cyclic or rep.s_commutative)
        c.true(f"{S.name} lagrange class consistent",
               rep.lagrange_class != LAGRANGE or rep.lagrange_dividing is not None)
        for g in rep.subgroups[:1] + tuple(rep.largest):
            c.true(f"{S.name} witness {g.members} re-verifies", subgroup_check(S, g.members) is not None)
        if S.size <= 64:
            for H in hyper_subsemigroups(S, ANY):
                c.true(f"{S.name} hyper {H} is S-subsemigroup", s_subsemigroup_check(S, H, ANY))
    return c.checks


def property_normality():
    c = _Collector()
    for n in range(5, 41):
        Zn = make_zn_mul(n)
        c.true(f"Z_{n}: {{1,{n - 1}}} not S-normal", not is_s_normal(Zn, group_from(Zn, [1, n - 1])))
    return c.checks


def property_roundtrip(corpus):
    c = _Collector()
    for S in corpus:
        T = deserialize(serialize(S))
        ok = (T.size == S.size and (T.table == S.table).all() and T.labels == S.labels
              and T.identity == S.identity and T.zero == S.zero and serialize(T) == serialize(S))
        c.true(f"{S.name} round trip", ok)
    return c.checks


def criterion_12(corpus=None):
    corpus = corpus or default_corpus()
    return (property_oracle_equivalence(corpus) + property_group_theory(corpus)
            + property_classifier(corpus) + property_normality() + property_roundtrip(corpus))


def criterion_13():
    c = _Collector()
    entries = run_errata_suite()
    ok, problems = errata_matches(entries)
    c.true("statuses match ledger", ok, "; ".join(problems))
    for e in entries:
        if e.status == "refuted":
            c.true(f"{e.claim_id} witness verifies", e.witness_ok)
    return c.checks


BOOK_CRITERIA = {
    1: ("Z_12 subgroup census", criterion_1),
    2: ("Z_16 Sylow anomaly", criterion_2),
    3: ("Z_10 fixtures", criterion_3),
    4: ("Z_p battery", criterion_4),
    5: ("S(3) battery", criterion_5),
    6: ("S(2) Lagrange", criterion_6),
    7: ("2x2 matrices over Z_2", criterion_7),
    8: ("Smarandache inverse suite", criterion_8),
    9: ("Smarandache conjugate suite", criterion_9),
    10: ("Products", criterion_10),
    11: ("Morphisms", criterion_11),
}
ALL_CRITERIA = {**BOOK_CRITERIA, 12: ("Property suites", criterion_12), 13: ("Errata suite", criterion_13)}


def summarize(checks):
    failed = [ch for ch in checks if not ch.ok]
    return not failed, failed
