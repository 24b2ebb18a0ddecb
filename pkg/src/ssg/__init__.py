"""Finite semigroups, their embedded groups, and Smarandache-style classification."""
from .classify import (
    ClassificationReport,
    SylowDetail,
    cauchy_elements,
    classify,
    hyper_subsemigroups,
    is_hyper_subsemigroup,
    is_s_semigroup,
    is_s_simple,
    s_subsemigroup_check,
    sylow_analysis,
)
from .corpus import ErrataEntry, brute_force_subgroups, default_corpus, run_errata_suite
from .cosets import (
    CosetPartitionReport,
    DoubleCosetReport,
    coset_partition_report,
    double_coset,
    double_coset_report,
    is_pseudo_simple,
    quotient,
    s_coset,
    s_normal_subgroups,
)
from .errors import *  # noqa: F401,F403
from .groups import (
    ConjugacyReport,
    cauchy_witness,
    conjugacy_analysis,
    cyclic_subgroup,
    double_coset_size_check,
    element_order,
    is_abelian,
    is_cyclic,
    lagrange_check,
    regular_representation,
    sylow_count_check,
    sylow_subgroups,
)
from .notions import (
    SConjugateWitness,
    SInversePair,
    classify_s_inverse,
    co_inverse_check,
    has_s_conjugate,
    has_s_inverse,
    is_self_inversed_pair,
    s_conjugates,
    s_inverse_pairs,
)
from .perms import (
    CycleDecomposition,
    Transformation,
    conjugate_by_replacement,
    cycle_decomposition,
    find_conjugator,
    from_cycles,
)
from .products import (
    ProductDecomposition,
    cayley_s_embedding,
    find_strong_decomposition,
    internal_product_check,
    s_direct_product_check,
    s_homomorphism_check,
    strong_internal_product_check,
)
from .semigroup import (
    FiniteSemigroup,
    closure,
    deserialize,
    direct_product,
    from_table,
    make_cyclic_group,
    make_full_transformation,
    make_matrix_semigroup,
    make_symmetric_group,
    make_zn_mul,
    serialize,
)
from .subgroups import (
    EmbeddedGroup,
    IdentityPolicy,
    all_subgroups,
    idempotents,
    largest_subgroups,
    maximal_subgroup_at,
    maximal_subgroups,
    subgroup_check,
)

__version__ = "0.1.0"
