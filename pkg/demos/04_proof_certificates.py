"""
Step-by-step certificates for the entropy bound
===============================================

certify() reduces a code tree one sibling merge at a time. Each step
records a defect delta <= 0, and the deltas telescope to H - ACL, so
the bound H <= ACL is witnessed rather than merely asserted.
"""

from fractions import Fraction as F

from codecert import certify, format_certificate, make_code, make_source

# a dyadic source matched to its tree: every step is tight
dyadic = make_source("abc", [F(1, 2), F(1, 4), F(1, 4)])
tree_code = make_code(2, [("a", "0"), ("b", "10"), ("c", "11")])
cert = certify(dyadic, tree_code)
print(format_certificate(cert))
print()

# a mismatched source: strictly negative defects accumulate
skewed = make_source("abcd", [F(2, 5), F(3, 10), F(1, 5), F(1, 10)])
code = make_code(2, [("a", "0"), ("b", "10"), ("c", "110"), ("d", "111")])
cert = certify(skewed, code)
print(format_certificate(cert))
print("gap H - ACL:", cert.entropy - cert.acl)
print("sum of defects:", cert.sum_delta)
print()

# wasteful codewords are spliced away first and the saving is recorded
padded = make_code(2, [("a", "00"), ("b", "0100"), ("c", "0110"), ("d", "0111")])
cert = certify(skewed, padded)
print("certified ACL:", cert.acl_exact, " saved:", cert.acl_drop)
print("verdict:", cert.verdict)
