"""Exact-rational sources, r-ary codes, and merge-chain certificates.

The package computes base-r entropy and average codeword length with
exact rational probabilities, decides prefix-freeness and unique
decipherability, builds instantaneous and Huffman codes, and certifies
H_r(S) <= ACL_r(S, C) instance by instance: the code's tree is reduced
to the empty-word code by merging sibling leaves, each merge logs a
defect <= 0, and the defects telescope to H - ACL. Equality detection
is exact (p_i = r**(-l_i)); floats only report magnitudes.
"""

from .codes import (
    Code,
    Codeword,
    EncodingPolicy,
    SimulationTrace,
    acl,
    acl_exact,
    empirical_acl,
    is_non_singular,
    kraft_sum,
    make_code,
    make_policy,
    minimal_reduction,
)
from .decipher import (
    brute_force_ud,
    construct_instantaneous,
    huffman,
    is_prefix_free,
    is_uniquely_decipherable,
    ud_counterexample,
)
from .errors import (
    CodecertError,
    DigitOutOfRange,
    DuplicateSymbol,
    ExtensionTooLarge,
    GroupLargerThanRadix,
    InvalidGroup,
    InvalidRadix,
    KraftViolated,
    MissingPolicy,
    MissingSymbol,
    NotCompact,
    NotPrefixFree,
    NotUniquelyDecipherable,
    ParseError,
    ProbabilitySumNotOne,
    RadixOneUnsupported,
    TreeTooSmall,
    UnsupportedMultiCodeword,
    ZeroOrNegativeProbability,
)
from .proof import (
    EqualityWitness,
    GhmResult,
    GroupInequalityResult,
    MergedSymbol,
    PpResult,
    RationalWeights,
    ReductionCertificate,
    ReductionStep,
    certify,
    check_group_inequality,
    check_pp_inequalities,
    check_rational_ghm,
    equality_condition,
    format_certificate,
    reduction_step,
)
from .randgen import (
    grow_full_tree,
    random_full_tree,
    random_group,
    random_kraft_lengths,
    random_prefix_code,
    random_source,
    reversed_code,
    trial_rng,
)
from .rng import GENERATOR_ID, SplitMix64, derived_seed
from .source import (
    REFERENCE_SEED,
    Source,
    StreamSeed,
    entropy,
    extend_source,
    make_source,
    parse_rational,
    sample_stream,
)
from .tree import (
    CodeTree,
    SiblingGroup,
    TreeNode,
    TreeStats,
    compact_standalone,
    dump_tree,
    find_sibling_group,
    from_tree,
    is_compact,
    replace_group_with_leaf,
    to_tree,
    tree_source,
    tree_stats,
)

__version__ = "1.0.0"

__all__ = [
    "Code",
    "CodeTree",
    "CodecertError",
    "Codeword",
    "DigitOutOfRange",
    "DuplicateSymbol",
    "EncodingPolicy",
    "EqualityWitness",
    "ExtensionTooLarge",
    "GENERATOR_ID",
    "GhmResult",
    "GroupInequalityResult",
    "GroupLargerThanRadix",
    "InvalidGroup",
    "InvalidRadix",
    "KraftViolated",
    "MergedSymbol",
    "MissingPolicy",
    "MissingSymbol",
    "NotCompact",
    "NotPrefixFree",
    "NotUniquelyDecipherable",
    "ParseError",
    "PpResult",
    "ProbabilitySumNotOne",
    "REFERENCE_SEED",
    "RadixOneUnsupported",
    "RationalWeights",
    "ReductionCertificate",
    "ReductionStep",
    "SiblingGroup",
    "SimulationTrace",
    "Source",
    "SplitMix64",
    "StreamSeed",
    "TreeNode",
    "TreeStats",
    "TreeTooSmall",
    "UnsupportedMultiCodeword",
    "ZeroOrNegativeProbability",
    "acl",
    "acl_exact",
    "brute_force_ud",
    "certify",
    "check_group_inequality",
    "check_pp_inequalities",
    "check_rational_ghm",
    "compact_standalone",
    "construct_instantaneous",
    "derived_seed",
    "dump_tree",
    "empirical_acl",
    "entropy",
    "equality_condition",
    "extend_source",
    "find_sibling_group",
    "format_certificate",
    "from_tree",
    "grow_full_tree",
    "huffman",
    "is_compact",
    "is_non_singular",
    "is_prefix_free",
    "is_uniquely_decipherable",
    "kraft_sum",
    "make_code",
    "make_policy",
    "make_source",
    "minimal_reduction",
    "parse_rational",
    "random_full_tree",
    "random_group",
    "random_kraft_lengths",
    "random_prefix_code",
    "random_source",
    "reduction_step",
    "replace_group_with_leaf",
    "reversed_code",
    "sample_stream",
    "to_tree",
    "tree_source",
    "tree_stats",
    "trial_rng",
    "ud_counterexample",
]
