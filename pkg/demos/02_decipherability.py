"""
Deciding unique decipherability
===============================

Two deciders: the dangling-suffix iteration, and a bounded search for
an actual ambiguous digit string. They must always agree.
"""

from codecert import (
    brute_force_ud,
    is_prefix_free,
    is_uniquely_decipherable,
    make_code,
    ud_counterexample,
)

prefix = make_code(2, [("a", "0"), ("b", "10"), ("c", "11")])
print("prefix-free:", is_prefix_free(prefix))
print("uniquely decipherable:", is_uniquely_decipherable(prefix))

# suffix codes are decipherable (read right to left) but not prefix-free
suffix = make_code(2, [("a", "0"), ("b", "01"), ("c", "11")])
print("suffix code prefix-free:", is_prefix_free(suffix))
print("suffix code decipherable:", is_uniquely_decipherable(suffix))

# an ambiguous code, with a shortest witness string
broken = make_code(2, [("a", "0"), ("b", "01"), ("c", "10")])
print("broken code decipherable:", is_uniquely_decipherable(broken))
print("witness:", ud_counterexample(broken, 12))  # 010 = a.c = b.a

# the bounded brute-force oracle agrees with the suffix iteration
for code in (prefix, suffix, broken):
    assert brute_force_ud(code, 12) == is_uniquely_decipherable(code)
print("both deciders agree on all three codes")
