"""The r-ary tree view of prefix-free codes.

Leaves correspond one-to-one to codewords (the digit path from the root
is the codeword) and may carry a symbol and its probability. Internal
nodes carry nothing. Trees are immutable; every operation returns a new
tree.

A tree is *compact* when no node except the root is its parent's only
child. Compacting splices such a child into its parent, which shortens
the codewords below it; repeated splicing of a bare chain collapses it
to the single-leaf tree whose codeword is the empty word. Compact trees
with at least two leaves always contain a deepest group of sibling
leaves, which is the unit the proof engine merges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .codes import Code, Codeword
from .decipher import is_prefix_free
from .errors import NotCompact, NotPrefixFree, TreeTooSmall
from .source import Source


@dataclass(frozen=True)
class TreeNode:
    """children is a digit-sorted tuple of (digit, node); leaves may hold a payload."""

    children: tuple[tuple[int, "TreeNode"], ...] = ()
    symbol: Any = None
    prob: Fraction | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class CodeTree:
    radix: int
    root: TreeNode

    def leaves(self) -> list[tuple[tuple[int, ...], TreeNode]]:
        """(path, leaf) pairs in depth-first digit order."""
        out = []

        def walk(node: TreeNode, path: tuple[int, ...]):
            if node.is_leaf:
                out.append((path, node))
                return
            for digit, child in node.children:
                walk(child, path + (digit,))

        walk(self.root, ())
        return out

    def node_at(self, path: tuple[int, ...]) -> TreeNode:
        node = self.root
        for digit in path:
            for d, child in node.children:
                if d == digit:
                    node = child
                    break
            else:
                raise KeyError(f"no node at path {path}")
        return node


@dataclass(frozen=True)
class SiblingGroup:
    """Sibling leaves differing only in their last digit, with their parent path."""

    parent: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TreeStats:
    n: int
    z: int
    is_full: bool


def to_tree(code: Code, src: Source | None = None) -> CodeTree:
    """Build the tree of a prefix-free one-codeword-per-symbol code.

    Leaves carry the symbol, and its probability when a source is given.
    """
    if not code.is_singleton():
        raise NotPrefixFree("tree view needs one codeword per symbol")
    if not is_prefix_free(code):
        raise NotPrefixFree("code is not prefix-free")

    # nested mutable shape first, frozen on the way out
    entries = [(symbol, words[0]) for symbol, words in code.mapping]

    def build(items: list, depth: int) -> TreeNode:
        here = [(s, w) for s, w in items if w.length == depth]
        if here:
            symbol = here[0][0]
            prob = src.prob_of(symbol) if src is not None else None
            return TreeNode((), symbol, prob)
        buckets: dict[int, list] = {}
        for s, w in items:
            buckets.setdefault(w.digits[depth], []).append((s, w))
        children = tuple(
            (digit, build(bucket, depth + 1)) for digit, bucket in sorted(buckets.items())
        )
        return TreeNode(children)

    return CodeTree(code.radix, build(entries, 0))


def from_tree(tree: CodeTree) -> Code:
    """The code of a tree's leaves, symbols in depth-first digit order.

    Leaves without a symbol get positional names leaf0, leaf1, ...
    """
    mapping = []
    for k, (path, leaf) in enumerate(tree.leaves()):
        symbol = leaf.symbol if leaf.symbol is not None else f"leaf{k}"
        mapping.append((symbol, (Codeword(path),)))
    return Code(tree.radix, tuple(mapping))


def tree_source(tree: CodeTree) -> Source:
    """The source carried on a tree's leaves (requires probabilities)."""
    symbols, probs = [], []
    for k, (path, leaf) in enumerate(tree.leaves()):
        if leaf.prob is None:
            raise ValueError(f"leaf at {path} carries no probability")
        symbols.append(leaf.symbol if leaf.symbol is not None else f"leaf{k}")
        probs.append(leaf.prob)
    return Source(tuple(symbols), tuple(probs))


def compact_standalone(tree: CodeTree) -> CodeTree:
    """Splice away every only-child node, to fixpoint.

    Payloads are preserved; no leaf gets deeper. A chain collapses to the
    single-leaf tree. Average codeword length never increases, and
    strictly decreases when a spliced edge sits above a leaf with
    positive probability.
    """

    def compact(node: TreeNode) -> TreeNode:
        if node.is_leaf:
            return node
        children = tuple((d, compact(c)) for d, c in node.children)
        while len(children) == 1:
            only = children[0][1]
            if only.is_leaf:
                return TreeNode((), only.symbol, only.prob)
            children = only.children
        return TreeNode(children)

    return CodeTree(tree.radix, compact(tree.root))


def is_compact(tree: CodeTree) -> bool:
    def ok(node: TreeNode) -> bool:
        if node.is_leaf:
            return True
        if len(node.children) == 1:
            return False
        return all(ok(c) for _, c in node.children)

    if tree.root.is_leaf:
        return True
    if len(tree.root.children) == 1:
        return False
    return all(ok(c) for _, c in tree.root.children)


def find_sibling_group(tree: CodeTree) -> SiblingGroup:
    """A deepest all-leaf sibling group of a compact tree.

    Deterministic: the deepest level, then the lexicographically least
    parent path. Existence is guaranteed for compact trees with at least
    two leaves, which is exactly what the induction needs.
    """
    leaves = tree.leaves()
    if len(leaves) < 2:
        raise TreeTooSmall("a sibling group needs at least two leaves")
    if not is_compact(tree):
        raise NotCompact("tree has an only-child node; compact it first")

    deepest = max(len(path) for path, _ in leaves)
    parents = sorted({path[:-1] for path, _ in leaves if len(path) == deepest})
    parent = parents[0]
    node = tree.node_at(parent)
    members = tuple(parent + (digit,) for digit, _ in node.children)
    # all children of a deepest leaf's parent are themselves deepest leaves
    return SiblingGroup(parent, members)


def tree_stats(tree: CodeTree) -> TreeStats:
    n = z = 0
    full = True

    def walk(node: TreeNode):
        nonlocal n, z, full
        if node.is_leaf:
            n += 1
            return
        z += 1
        if len(node.children) != tree.radix:
            full = False
        for _, child in node.children:
            walk(child)

    walk(tree.root)
    return TreeStats(n, z, full)


def replace_group_with_leaf(
    tree: CodeTree, group: SiblingGroup, symbol, prob: Fraction | None
) -> CodeTree:
    """The tree with the group's parent turned into a leaf (used by reductions)."""

    def rebuild(node: TreeNode, path: tuple[int, ...]) -> TreeNode:
        if path == group.parent:
            return TreeNode((), symbol, prob)
        depth = len(path)
        children = tuple(
            (d, rebuild(c, path + (d,)) if group.parent[:depth] == path and d == group.parent[depth] else c)
            for d, c in node.children
        )
        return TreeNode(children, node.symbol, node.prob)

    return CodeTree(tree.radix, rebuild(tree.root, ()))


def dump_tree(tree: CodeTree) -> str:
    """Indented text dump, one node per line: '<digit-path> [symbol p=a/b]'."""
    lines = []

    def walk(node: TreeNode, path: tuple[int, ...], depth: int):
        label = str(Codeword(path))
        if node.is_leaf and node.symbol is not None:
            label += f" {node.symbol}"
            if node.prob is not None:
                label += f" p={node.prob}"
        lines.append("  " * depth + label)
        for digit, child in node.children:
            walk(child, path + (digit,), depth + 1)

    walk(tree.root, (), 0)
    return "\n".join(lines)
