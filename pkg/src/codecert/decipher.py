"""Decidability of the code classes: prefix-freeness, unique
decipherability, a brute-force oracle, the Kraft construction, and
Huffman coding.

Unique decipherability is decided two independent ways:

  * is_uniquely_decipherable: the Sardinas-Patterson dangling-suffix
    iteration over the pooled codeword set (one codeword per symbol);
  * brute_force_ud: direct counting of decodings of every digit string
    up to a length budget, which also handles several codewords per
    symbol by counting distinct decoded *symbol* sequences.

Convention for the empty codeword: a code whose only codeword is the
empty word is treated as uniquely decipherable (it is the degenerate
one-symbol base case, and it is prefix-free); the empty word next to
any other codeword makes a code undecipherable, since it can be
inserted into a parse any number of times. Both deciders implement the
same convention.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Any, Sequence

from .codes import Code, Codeword, kraft_sum
from .errors import InvalidRadix, KraftViolated, UnsupportedMultiCodeword
from .source import Source

DEFAULT_UD_BUDGET = 12


def is_prefix_free(code: Code) -> bool:
    """True iff no pooled codeword is a prefix of a distinct pooled codeword.

    Duplicated codewords count as mutual prefixes, and the empty word is
    a prefix of everything, so either of those makes the code not
    prefix-free (unless the empty word is the only codeword).
    """
    pooled = code.pooled()
    for i, u in enumerate(pooled):
        for j, v in enumerate(pooled):
            if i != j and u.is_prefix_of(v):
                return False
    return True


def _sardinas_patterson(codewords: set[tuple[int, ...]]) -> tuple[bool, set[tuple[int, ...]]]:
    """Run the dangling-suffix iteration; returns (is_ud, suffixes seen)."""
    dangling: set[tuple[int, ...]] = set()
    for u in codewords:
        for v in codewords:
            if u != v and v[: len(u)] == u:
                dangling.add(v[len(u):])
    visited: set[tuple[int, ...]] = set()
    frontier = dangling
    while frontier:
        if frontier & codewords:
            return False, visited | frontier
        visited |= frontier
        nxt: set[tuple[int, ...]] = set()
        for d in frontier:
            for c in codewords:
                if len(c) > len(d) and c[: len(d)] == d:
                    nxt.add(c[len(d):])
                elif len(d) > len(c) and d[: len(c)] == c:
                    nxt.add(d[len(c):])
        frontier = nxt - visited
    return True, visited


def is_uniquely_decipherable(code: Code) -> bool:
    """Sardinas-Patterson decision for codes with one codeword per symbol."""
    if not code.is_singleton():
        raise UnsupportedMultiCodeword(
            "Sardinas-Patterson runs on pooled singleton codes; use brute_force_ud "
            "for codes with several codewords per symbol"
        )
    pooled = [w.digits for w in code.pooled()]
    if len(set(pooled)) != len(pooled):
        return False  # shared codeword: two symbols decode identically
    if () in pooled:
        return len(pooled) == 1
    ok, _ = _sardinas_patterson(set(pooled))
    return ok


def ud_counterexample(code: Code, max_len: int = DEFAULT_UD_BUDGET) -> str | None:
    """Shortest digit string with two distinct decodings, or None.

    Counts distinct decoded symbol sequences for every digit string of
    length <= max_len by dynamic programming over string prefixes; ties
    at the witness length break to the least digit string. Works for
    codes with several codewords per symbol: two parses that pick
    different codewords of the same symbols are one decoding, not two.
    """
    pooled = code.pooled()
    empties = sum(1 for w in pooled if w.length == 0)
    if empties:
        if len(pooled) == 1:
            return None
        # The empty string already decodes as "" and as the empty-word symbol.
        return "-"

    transitions = []
    for symbol, words in code.mapping:
        for w in words:
            transitions.append((w.digits, symbol))

    # One codeword per symbol: parses and decoded symbol sequences are in
    # bijection, so integer counts per exact length suffice. Counts cap at
    # 2; a level is final once all shorter levels were extended, since
    # every transition is nonempty.
    if code.is_singleton():
        levels: list[dict[tuple[int, ...], int]] = [{} for _ in range(max_len + 1)]
        levels[0][()] = 1
        for length in range(max_len + 1):
            current = levels[length]
            if not current:
                continue
            ambiguous = [s for s, c in current.items() if c >= 2]
            if ambiguous:
                return str(Codeword(min(ambiguous)))
            for prefix, count in current.items():
                for w, _ in transitions:
                    k = length + len(w)
                    if k <= max_len:
                        bucket = levels[k]
                        s = prefix + w
                        bucket[s] = min(2, bucket.get(s, 0) + count)
        return None

    # Several codewords per symbol: store up to 2 distinct decoded symbol
    # sequences per string. Levels are checked before they are extended,
    # so every extended prefix carries exactly one sequence and the cap
    # never hides an ambiguity.
    seq_levels: list[dict[tuple[int, ...], list[tuple]]] = [{} for _ in range(max_len + 1)]
    seq_levels[0][()] = [()]
    for length in range(max_len + 1):
        current = seq_levels[length]
        if not current:
            continue
        ambiguous = [s for s, seqs in current.items() if len(seqs) >= 2]
        if ambiguous:
            return str(Codeword(min(ambiguous)))
        for prefix, seqs in current.items():
            for w, symbol in transitions:
                k = length + len(w)
                if k > max_len:
                    continue
                bucket = seq_levels[k].setdefault(prefix + w, [])
                for q in seqs:
                    if len(bucket) >= 2:
                        break
                    cand = q + (symbol,)
                    if cand not in bucket:
                        bucket.append(cand)
    return None


def brute_force_ud(code: Code, max_len: int = DEFAULT_UD_BUDGET) -> bool:
    """True iff every digit string of length <= max_len decodes at most one way."""
    return ud_counterexample(code, max_len) is None


def _int_to_digits(value: int, width: int, r: int) -> tuple[int, ...]:
    digits = []
    for _ in range(width):
        value, d = divmod(value, r)
        digits.append(d)
    return tuple(reversed(digits))


def construct_instantaneous(lengths: Sequence[int], r: int, symbols: Sequence | None = None) -> Code:
    """Kraft's constructive direction: a canonical prefix-free code with
    exactly the requested lengths.

    Lengths are processed in ascending order (stable over the input
    order) and codewords are assigned in lexicographic order, skipping
    descendants of already-assigned words. The i-th output codeword has
    exactly the i-th input length.
    """
    if not isinstance(r, int) or r < 2:
        raise InvalidRadix(f"radix must be an integer >= 2, got {r!r}")
    lengths = list(lengths)
    total = kraft_sum(lengths, r)
    if total > 1:
        raise KraftViolated(f"sum of r^-l is {total} > 1; no prefix-free code exists")
    if symbols is None:
        symbols = [f"s{i + 1}" for i in range(len(lengths))]
    if len(symbols) != len(lengths):
        raise ValueError("symbols and lengths must have equal length")

    order = sorted(range(len(lengths)), key=lambda i: lengths[i])
    words: dict[int, Codeword] = {}
    value = 0
    prev_len = None
    for i in order:
        l = lengths[i]
        if prev_len is None:
            value = 0
        else:
            value = (value + 1) * r ** (l - prev_len)
        words[i] = Codeword(_int_to_digits(value, l, r))
        prev_len = l
    return Code(r, tuple((symbols[i], (words[i],)) for i in range(len(lengths))))


class _HuffNode:
    __slots__ = ("weight", "order", "symbol", "children")

    def __init__(self, weight: Fraction, order: int, symbol=None, children=()):
        self.weight = weight
        self.order = order
        self.symbol = symbol
        self.children = children

    def __lt__(self, other: "_HuffNode") -> bool:
        return (self.weight, self.order) < (other.weight, other.order)


def huffman(src: Source, r: int) -> Code:
    """Huffman's minimum-redundancy instantaneous code for the source.

    For r > 2 the alphabet is padded with zero-weight placeholders so
    that the leaf count is 1 mod (r-1); placeholders never appear in the
    output. Ties merge the earliest-created nodes first (leaves are
    created in symbol order), and the merged group takes digits 0..r-1
    in that same order, so the output is deterministic.
    """
    if not isinstance(r, int) or r < 2:
        raise InvalidRadix(f"radix must be an integer >= 2, got {r!r}")
    n = len(src)
    heap: list[_HuffNode] = [
        _HuffNode(p, i, symbol=s) for i, (s, p) in enumerate(zip(src.symbols, src.probs))
    ]
    pad = 0
    if r > 2:
        while (n + pad) % (r - 1) != 1:
            pad += 1
    for k in range(pad):
        heap.append(_HuffNode(Fraction(0), n + k))
    heapq.heapify(heap)

    order = n + pad
    while len(heap) > 1:
        group = [heapq.heappop(heap) for _ in range(min(r, len(heap)))]
        merged = _HuffNode(
            sum((g.weight for g in group), Fraction(0)), order, children=tuple(group)
        )
        order += 1
        heapq.heappush(heap, merged)

    root = heap[0]
    assignments: dict[Any, Codeword] = {}

    def walk(node: _HuffNode, path: tuple[int, ...]):
        if not node.children:
            if node.symbol is not None:
                assignments[node.symbol] = Codeword(path)
            return
        for digit, child in enumerate(node.children):
            walk(child, path + (digit,))

    walk(root, ())
    return Code(r, tuple((s, (assignments[s],)) for s in src.symbols))
