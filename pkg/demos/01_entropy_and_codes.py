"""
Sources, entropy, and average codeword length
=============================================

A source is a finite alphabet with exact rational probabilities.
Entropy and code statistics stay exact until the final float.
"""

from fractions import Fraction as F

from codecert import (
    acl,
    acl_exact,
    entropy,
    make_code,
    make_policy,
    make_source,
    minimal_reduction,
)

# a four-symbol source; probabilities must sum to exactly 1
src = make_source("abcd", [F(2, 5), F(3, 10), F(1, 5), F(1, 10)])
print("symbols:", src.symbols)
print("probs:  ", [str(p) for p in src.probs])

# entropy in digits per symbol, for a few alphabet sizes
for r in (2, 3, 4):
    print(f"H_{r}(S) = {entropy(src, r):.6f}")

# a binary prefix-free code for the same alphabet
code = make_code(2, [("a", "0"), ("b", "10"), ("c", "110"), ("d", "111")])
print("ACL exact:", acl_exact(src, code), "=", acl(src, code))

# a symbol may carry several codewords; a policy weights the choice
weighted = make_code(2, {"a": ("0", "111"), "b": ("10",), "c": ("110",), "d": ("1110",)})
policy = make_policy({"a": (F(1, 2), F(1, 2)), "b": (1,), "c": (1,), "d": (1,)})
print("policy ACL:", acl_exact(src, weighted, policy))

# dropping every codeword but the shortest can only help
print("shortest-word ACL:", acl_exact(src, minimal_reduction(weighted)))
