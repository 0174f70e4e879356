"""Reduction certificates for the bound H_r(S) <= ACL_r(S, C).

The engine works on the tree view of a prefix-free code. One step picks
a deepest group of sibling leaves, merges them into their parent, and
records the defect

    delta = p_red*log_r(p_red) - sum_k p_k*log_r(p_k) - p_red

where p_red is the group's total probability. Each step changes H by
delta + p_red and ACL by p_red, so the defects telescope: summed over a
full chain of merges down to the one-leaf tree they equal H - ACL.
Every defect is <= 0, which proves the bound, and a step's defect is 0
exactly when the group has r members of equal probability.

Defects are reported as floats but verdicts are decided exactly: a step
is tight iff s = r and the probabilities match as rationals, and the
whole chain is tight iff p_i = r**(-l_i) for every symbol. Floats never
decide equality.

Unit radix is degenerate: only a one-symbol source can be usefully
encoded, the chain has zero steps, and the certificate just reports
H = 0 against the given length (equal only for the empty codeword).
The telescoping identity is vacuous there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .codes import Code, acl_exact, minimal_reduction
from .decipher import construct_instantaneous, is_prefix_free, is_uniquely_decipherable
from .errors import (
    GroupLargerThanRadix,
    InvalidGroup,
    MissingSymbol,
    NotUniquelyDecipherable,
    RadixOneUnsupported,
    ZeroOrNegativeProbability,
)
from .source import Source, _check_radix, entropy
from .tree import (
    CodeTree,
    SiblingGroup,
    compact_standalone,
    find_sibling_group,
    from_tree,
    replace_group_with_leaf,
    to_tree,
    tree_source,
)

TIGHT_TOL = 1e-9
LOG_SLACK = 1e-12


@dataclass(frozen=True)
class MergedSymbol:
    """Placeholder symbol standing for a merged group of leaves."""

    members: tuple[Any, ...]

    def __str__(self) -> str:
        return "(" + "+".join(str(m) for m in self.members) + ")"


@dataclass(frozen=True)
class ReductionStep:
    """One sibling merge: the group, its probabilities, and the defect."""

    group: SiblingGroup
    probs: tuple[Fraction, ...]
    p_red: Fraction
    l_red: int
    delta: float
    is_tight: bool

    @property
    def s(self) -> int:
        return self.group.s


@dataclass(frozen=True)
class EqualityWitness:
    """Internal node count z and the exponents l_i with p_i = r**(-l_i)."""

    z: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class ReductionCertificate:
    source: Source
    code: Code
    # same length multiset as the minimal reduction of code, rebuilt in
    # canonical digit order so the chain is byte-reproducible
    canonical_code: Code
    # canonical code with chain nodes spliced out; the chain runs on this
    certified_code: Code
    acl_drop: Fraction
    steps: tuple[ReductionStep, ...]
    entropy: float
    acl: float
    acl_exact: Fraction
    sum_delta: float
    verdict: str
    witness: EqualityWitness | None


@dataclass(frozen=True)
class GroupInequalityResult:
    value: float
    holds: bool
    tight: bool


@dataclass(frozen=True)
class RationalWeights:
    """A probability group scaled to integer frequencies f_k over F = sum."""

    frequencies: tuple[int, ...]
    radix: int

    def __post_init__(self):
        if not self.frequencies:
            raise ValueError("need at least one frequency")
        for f in self.frequencies:
            if not isinstance(f, int) or isinstance(f, bool) or f <= 0:
                raise ValueError(f"frequencies must be positive integers, got {f!r}")
        _check_radix(self.radix)
        if len(self.frequencies) > self.radix:
            raise GroupLargerThanRadix(
                f"group of {len(self.frequencies)} exceeds radix {self.radix}"
            )

    @property
    def s(self) -> int:
        return len(self.frequencies)

    @property
    def F(self) -> int:
        return sum(self.frequencies)

    @property
    def f_red(self) -> int:
        # the merged weight is the whole group's mass
        return self.F


@dataclass(frozen=True)
class GhmResult:
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class PpResult:
    ineq_a: bool
    ineq_b: bool | None


def _delta(probs: tuple[Fraction, ...], p_red: Fraction, r: int) -> float:
    log_r = math.log(r)
    red = float(p_red)
    group = math.fsum(float(p) * math.log(p) / log_r for p in probs)
    return red * math.log(red) / log_r - group - red


def reduction_step(
    src: Source, tree: CodeTree, group: SiblingGroup
) -> tuple[Source, CodeTree, ReductionStep]:
    """Merge a sibling-leaf group into its parent.

    Returns the reduced source, the reduced tree, and the step record.
    The reduced source lists the reduced tree's leaves in digit order,
    so repeated steps keep source and tree aligned.
    """
    r = tree.radix
    _check_radix(r)
    try:
        parent = tree.node_at(group.parent)
    except KeyError:
        raise InvalidGroup(f"no node at parent path {group.parent}") from None
    expected = tuple(group.parent + (d,) for d, _ in parent.children)
    if parent.is_leaf or expected != group.members:
        raise InvalidGroup("group members are not exactly the parent's children")
    if any(not c.is_leaf for _, c in parent.children):
        raise InvalidGroup("group contains an internal node")
    if group.s < 2 or group.s > r:
        raise InvalidGroup(f"group size {group.s} outside 2..{r}")
    probs = []
    for _, child in parent.children:
        if child.prob is None:
            raise InvalidGroup("group leaf carries no probability")
        probs.append(child.prob)
    probs = tuple(probs)

    p_red = sum(probs, Fraction(0))
    merged = MergedSymbol(tuple(c.symbol for _, c in parent.children))
    reduced_tree = replace_group_with_leaf(tree, group, merged, p_red)
    reduced_src = tree_source(reduced_tree)
    step = ReductionStep(
        group=group,
        probs=probs,
        p_red=p_red,
        l_red=len(group.parent),
        delta=_delta(probs, p_red, r),
        is_tight=(group.s == r and len(set(probs)) == 1),
    )
    return reduced_src, reduced_tree, step


def _check_alignment(src: Source, code: Code) -> None:
    have = set(code.symbols)
    want = set(src.symbols)
    if want - have:
        missing = sorted(str(s) for s in want - have)
        raise MissingSymbol(f"code has no codeword for {', '.join(missing)}")
    if have - want:
        extra = sorted(str(s) for s in have - want)
        raise MissingSymbol(f"code maps symbols outside the source: {', '.join(extra)}")


def certify(src: Source, code: Code) -> ReductionCertificate:
    """Build the full merge chain from code down to the empty-word code.

    The input may map several codewords per symbol; the chain runs on
    its minimal reduction. A decipherable but not prefix-free code is
    first rebuilt as an instantaneous code on the same lengths, and a
    tree with splice-able chain nodes is compacted, recording the exact
    ACL decrease; the bound for the original code follows a fortiori.
    """
    _check_alignment(src, code)
    reduced = minimal_reduction(code)
    r = code.radix

    if r == 1:
        if len(src) > 1:
            raise RadixOneUnsupported(
                "unit radix admits no decipherable code for two or more symbols"
            )
        length = reduced.codewords(src.symbols[0])[0].length
        equal = length == 0
        return ReductionCertificate(
            source=src,
            code=code,
            canonical_code=reduced,
            certified_code=reduced,
            acl_drop=Fraction(0),
            steps=(),
            entropy=0.0,
            acl=float(length),
            acl_exact=Fraction(length),
            sum_delta=0.0,
            verdict="Equality" if equal else "StrictInequality",
            witness=EqualityWitness(0, (0,)) if equal else None,
        )

    if not is_prefix_free(reduced) and not is_uniquely_decipherable(reduced):
        raise NotUniquelyDecipherable("no decoder can invert this code")

    symbols = reduced.symbols
    lengths = [reduced.codewords(s)[0].length for s in symbols]
    canonical = construct_instantaneous(lengths, r, symbols=symbols)

    tree = compact_standalone(to_tree(canonical, src))
    certified = from_tree(tree)
    acl_fraction = acl_exact(src, certified)
    drop = acl_exact(src, canonical) - acl_fraction

    cur = tree_source(tree)
    steps: list[ReductionStep] = []
    while len(tree.leaves()) > 1:
        group = find_sibling_group(tree)
        cur, tree, step = reduction_step(cur, tree, group)
        steps.append(step)

    all_tight = all(s.is_tight for s in steps)
    equal, witness = equality_condition(src, certified)
    assert equal == all_tight, "exact tightness disagrees with the length condition"

    return ReductionCertificate(
        source=src,
        code=code,
        canonical_code=canonical,
        certified_code=certified,
        acl_drop=drop,
        steps=tuple(steps),
        entropy=entropy(src, r),
        acl=float(acl_fraction),
        acl_exact=acl_fraction,
        sum_delta=math.fsum(s.delta for s in steps),
        verdict="Equality" if all_tight else "StrictInequality",
        witness=witness,
    )


def equality_condition(src: Source, code: Code) -> tuple[bool, EqualityWitness | None]:
    """Exact test for H = ACL: p_i = r**(-l_i) for every symbol.

    Uses each symbol's shortest codeword. When the condition holds the
    leaf count satisfies n = z*(r-1) + 1 and the witness carries z and
    the exponents in source order. No floating point is involved.
    """
    reduced = minimal_reduction(code)
    r = code.radix
    lengths = [reduced.codewords(s)[0].length for s in src.symbols]

    if r == 1:
        if len(src) == 1 and lengths[0] == 0:
            return True, EqualityWitness(0, (0,))
        return False, None

    for p, length in zip(src.probs, lengths):
        if p != Fraction(1, r**length):
            return False, None
    n = len(src)
    assert (n - 1) % (r - 1) == 0, "power-of-r probabilities force a full tree"
    return True, EqualityWitness((n - 1) // (r - 1), tuple(lengths))


def check_group_inequality(probs, r: int) -> GroupInequalityResult:
    """The per-merge inequality prod_k (r*p_k / sum_p)**p_k >= 1 for s <= r.

    Evaluated in log space; `tight` is the exact rational test s = r
    with all p_k equal, which the value check cross-validates.
    """
    _check_radix(r)
    probs = tuple(Fraction(p) for p in probs)
    if not probs:
        raise ValueError("need at least one probability")
    for p in probs:
        if p <= 0:
            raise ZeroOrNegativeProbability(f"group probabilities must be positive, got {p}")
    s = len(probs)
    if s > r:
        raise GroupLargerThanRadix(f"group of {s} exceeds radix {r}")

    total = float(sum(probs))
    log_value = math.fsum(
        float(p) * (math.log(r) + math.log(p) - math.log(total)) for p in probs
    )
    value = math.exp(log_value)
    return GroupInequalityResult(
        value=value,
        holds=value >= 1.0 - LOG_SLACK,
        tight=(s == r and len(set(probs)) == 1),
    )


def check_rational_ghm(w: RationalWeights) -> GhmResult:
    """Exact integer form of the per-merge inequality.

    For frequencies f_k over F = sum f_k verifies

        prod_k (r*f_k / F)**f_k  >=  (r/s)**F  >=  1

    entirely in big-integer arithmetic. This grounds the log-space
    checker: means of the F-term sequence holding f_k copies of r*f_k/F
    compare geometric against harmonic, and the harmonic mean is r/s.
    """
    r, F, s = w.radix, w.F, w.s
    lhs_num = 1
    for f in w.frequencies:
        lhs_num *= (r * f) ** f
    lhs = Fraction(lhs_num, F**F)
    rhs = Fraction(r**F, s**F)
    return GhmResult(lhs=lhs, rhs=rhs, holds=lhs >= rhs >= 1)


def check_pp_inequalities(probs, r: int) -> PpResult:
    """Two corollaries of the per-merge inequality, checked in log space.

    ineq_a: (sum_p / r)**sum_p <= prod_k p_k**p_k, meaningful for s <= r
    (reported honestly either way). ineq_b: prod_k p_k**p_k >= 1/s,
    evaluated only when the probabilities sum to exactly 1.
    """
    _check_radix(r)
    probs = tuple(Fraction(p) for p in probs)
    if not probs:
        raise ValueError("need at least one probability")
    for p in probs:
        if p <= 0:
            raise ZeroOrNegativeProbability(f"probabilities must be positive, got {p}")
    s = len(probs)
    total = sum(probs)

    power_sum = math.fsum(float(p) * math.log(p) for p in probs)
    lhs_a = float(total) * (math.log(total) - math.log(r))
    ineq_a = lhs_a <= power_sum + LOG_SLACK
    ineq_b = power_sum >= -math.log(s) - LOG_SLACK if total == 1 else None
    return PpResult(ineq_a=ineq_a, ineq_b=ineq_b)


def _fmt_path(path: tuple[int, ...]) -> str:
    if not path:
        return "-"
    if any(d > 9 for d in path):
        return ".".join(str(d) for d in path)
    return "".join(str(d) for d in path)


def format_certificate(cert: ReductionCertificate) -> str:
    """Serialize a certificate, one line per step plus a summary line."""
    lines = []
    for k, step in enumerate(cert.steps, start=1):
        lines.append(
            f"step {k}: merge parent={_fmt_path(step.group.parent)}"
            f" s={step.s}"
            f" p_red={step.p_red.numerator}/{step.p_red.denominator}"
            f" delta={step.delta!r}"
            f" tight={step.is_tight}"
        )
    lines.append(
        f"H={cert.entropy!r} ACL={cert.acl!r}"
        f" sum_delta={cert.sum_delta!r} verdict={cert.verdict}"
    )
    return "\n".join(lines)
