"""
Integral spectra of zero-diagonal symmetric matrices
====================================================

A symmetric integer matrix with zeros on the diagonal and off-diagonal
entries a, b, c has characteristic polynomial

    X^3 - (a^2 + b^2 + c^2) X - 2abc.

This script hunts for triples 0 < a < b < c whose three eigenvalues are
all integers, then evaluates the degree four parametrization that
produces infinitely many of them.
"""

from zerodiag import surface

# The smallest example.  Entries sharing a value or equal to zero force
# an integral spectrum for boring reasons, so the search skips those.
print("searching a < b < c <= 114 ...")
for triple, eigs in surface.search(114):
    print("  entries %r  spectrum %r" % (triple, eigs))

print("searching a < b < c <= 125 ...")
for triple, eigs in surface.search(125):
    print("  entries %r  spectrum %r" % (triple, eigs))

# A single rational parameter produces such triples in degree 4.
par = surface.low_degree_parametrization()
print("\nparametrization components (x, y, z, a, b, c):")
for name, comp in zip("xyzabc", par.components()):
    print("  %s = %s" % (name, comp))
print("verified on the nose:", par.verify())

# Plugging in t = 3 recovers the second triple found above.
print("\nat t = 3:", par.evaluate_projective(3))

# Values of t where the image degenerates into a trivial triple.
print("degenerate integer parameters:",
      surface.integer_trivial_locus(par))

# Any other rational t gives a fresh triple, after clearing denominators.
# The components list the eigenvalues in no particular order.
for t0 in (5, 7, -3):
    x, y, z, a, b, c = par.evaluate_projective(t0)
    spectrum = surface.integral_eigenvalues(a, b, c)
    assert spectrum == tuple(sorted((x, y, z), reverse=True))
    print("t = %3d  entries %r  spectrum %r" % (t0, (a, b, c), spectrum))
