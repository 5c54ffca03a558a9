# Every multiple of the section P maps to a rational curve on the
# surface, giving a new polynomial parametrization of matrix triples
# with integral spectrum.  Their degrees grow quadratically, so the
# curves are pairwise distinct and rational points are Zariski dense.

from zerodiag.curve import named_sections, param_to_point, point_to_param

P = param_to_point(named_sections()["P"])

for n in range(1, 4):
    par = point_to_param(n * P)
    assert par.verify()
    a, b, c = par.components()[3:]
    print("n = %d  image degree %d" % (n, par.degree()))
    print("  a =", a)
    print("  b =", b)
    print("  c =", c)

# spot check: the degree 8 curve at t = 3 gives yet another matrix
par2 = point_to_param(2 * P)
x, y, z, a, b, c = par2.evaluate_projective(3)
print("\ndegree 8 curve at t = 3: entries %r, spectrum %r"
      % ((a, b, c), (x, y, z)))
