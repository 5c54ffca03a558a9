# The surface of all (x : y : z : a : b : c) where x, y, z is the
# spectrum of the matrix with off-diagonal entries a, b, c fibers into
# elliptic curves over the t-line after setting x = t*a.  This script
# builds the Weierstrass model of the generic fiber and classifies the
# bad fibers.

from fractions import Fraction

from zerodiag.curve import (euler_number, family_model, shioda_tate_rank,
                            tate_classify)

model = family_model()
print("v^2 = u^3 + (%s) u^2 + (%s) u + (%s)" % (model.a2, model.a4,
                                                model.a6))

disc = model.discriminant()
print("discriminant:", disc)
print("j invariant: ", model.j_invariant())

# Tate's algorithm at each zero of the discriminant, plus t = infinity.
print("\nplace    type  components  simple")
for fib in tate_classify(model):
    place = fib.place if fib.place == "inf" else Fraction(fib.place)
    print("%-8s %-5s %-11d %d" % (place, fib.symbol, fib.components,
                                  fib.simple))

# The component counts pin the surface invariants: the Euler numbers of
# the fibers sum to 24, as they must on a K3 surface, and the Picard
# number follows from the Shioda-Tate formula once the Mordell-Weil
# rank (2, established in demo 03) is known.
print("\nEuler number:", euler_number(model))
print("Picard number from Shioda-Tate with rank 2:",
      shioda_tate_rank(model, 2))
