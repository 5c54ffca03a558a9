"""Heights and the Mordell-Weil lattice of the family fibration.

The canonical height pairing of sections is computed exactly from
intersection data:

    <S,S> = 4 + 2 (S.O) - sum_v contr_v(S)
    <S,T> = 2 + (S.O) + (T.O) - (S.T) - sum_v contr_v(S,T)

(the surface has chi = 2).  (S.O) needs only pole degrees of the
u-coordinate; (S.T) is reduced to ((S-T).O) through translation by a
section, which extends to an automorphism of the relatively minimal
elliptic surface.  The correction terms contr_v need to know which fiber
component a section hits, which is decided by expanding the section in
truncated power series at each bad place; at a multiplicative place the
node of the Weierstrass cubic is first lifted to a series root of g'
(plain evaluation at the place is not enough, because a section can agree
with the node to higher order).

Also here: the torsion sections, the two-descent style saturation
argument for the full Mordell-Weil lattice, and small certificate
objects the command line tool prints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import (
    PoleError,
    Polynomial,
    QuadElem,
    RationalFunction,
    poly_gcd,
    quad_sqrt,
    rat,
    rat_sqrt,
    rational_roots,
    squarefree_part,
)
from .curve import (
    CurvePoint,
    INFINITE_PLACE,
    WeierstrassModel,
    family_model,
    model_at_infinity,
    named_sections,
    param_to_point,
    tate_classify,
)

CHI = 2  # holomorphic Euler characteristic of the surface


# -- truncated power series ----------------------------------------------------


class Series:
    """Truncated power series with exact coefficients (Q or Q(sqrt 3))."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec):
        cs = [c if isinstance(c, QuadElem) else rat(c)
              for c in list(coeffs)[:prec]]
        cs += [Fraction(0)] * (prec - len(cs))
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, *a):
        raise AttributeError("Series is immutable")

    @classmethod
    def from_polynomial(cls, poly: Polynomial, prec: int) -> "Series":
        return cls(list(poly.coeffs), prec)

    @classmethod
    def constant(cls, c, prec: int) -> "Series":
        return cls([c], prec)

    def __add__(self, other):
        assert self.prec == other.prec
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.prec)

    def __sub__(self, other):
        assert self.prec == other.prec
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], self.prec)

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.prec)

    def __mul__(self, other):
        if isinstance(other, Series):
            assert self.prec == other.prec
            out = [Fraction(0)] * self.prec
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(self.prec - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return Series(out, self.prec)
        return Series([a * other for a in self.coeffs], self.prec)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term")
        inv0 = c0.inverse() if isinstance(c0, QuadElem) else 1 / c0
        out = [inv0]
        for k in range(1, self.prec):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return Series(out, self.prec)

    def __truediv__(self, other):
        return self * other.inverse()

    def sqrt(self, root0) -> "Series":
        """Square root with prescribed constant term root0."""
        s = Series.constant(root0, self.prec)
        steps = 1
        while (1 << steps) < self.prec:
            steps += 1
        for _ in range(steps + 1):
            s = (s + self / s) * Fraction(1, 2)
        if not (s * s - self).is_zero():
            raise ArithmeticError("series square root did not converge")
        return s

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def ord(self) -> int:
        """Order of vanishing; equals prec when zero to working precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.prec

    def shift_down(self, k: int) -> "Series":
        """Divide by the k-th power of the variable."""
        if any(self.coeffs[i] for i in range(k)):
            raise ValueError("not divisible")
        return Series(self.coeffs[k:] + [Fraction(0)] * k, self.prec)

    def at_zero(self):
        return self.coeffs[0]

    def __repr__(self):
        return "Series(%s + O(e^%d))" % (self.coeffs, self.prec)


def _series_of_rf(rf: RationalFunction, r, prec: int) -> Series:
    """Expansion of a rational function at t = r.  Raises PoleError at a
    pole."""
    num = rf.num.shift(r)
    den = rf.den.shift(r)
    if not den[0]:
        raise PoleError("expansion at a pole")
    return Series.from_polynomial(num, prec) / Series.from_polynomial(den, prec)


def _field_sqrt(c):
    """Exact square root of a field element, lifting Q into Q(sqrt 3) when
    that is where the root lives."""
    if isinstance(c, QuadElem):
        return quad_sqrt(c)
    root = rat_sqrt(c)
    if root is not None:
        return root
    return quad_sqrt(QuadElem(c, 0))


# -- local fiber geometry -------------------------------------------------------


@lru_cache(maxsize=None)
def _family_fibers():
    return tuple(tate_classify(family_model()))


def _localize_section(pt: CurvePoint, place):
    """(u, v) of a section as rational functions in the local coordinate of
    the place (t - r at a finite place, s = 1/t at infinity, matching the
    twisted model there)."""
    if place == INFINITE_PLACE:
        model = pt.model
        a2b, a4b, a6b, k = model_at_infinity(model)
        inf_model = WeierstrassModel(a2b, a4b, a6b)

        def twist(rf, w):
            num, den = rf.num, rf.den
            if num.is_zero:
                return RationalFunction(0)
            s = Polynomial.gen()
            shift = w - (num.degree - den.degree)
            rn, rd = num.reverse(num.degree), den.reverse(den.degree)
            if shift >= 0:
                return RationalFunction(rn * s ** shift, rd)
            return RationalFunction(rn, rd * s ** (-shift))

        u = twist(pt.u, 2 * k)
        v = twist(pt.v, 3 * k)
        return inf_model.point(u, v)
    r = Fraction(place)

    def shift(rf):
        return RationalFunction(rf.num.shift(r), rf.den.shift(r))

    model = WeierstrassModel(shift(pt.model.a2), shift(pt.model.a4),
                             shift(pt.model.a6))
    return model.point(shift(pt.u), shift(pt.v))


def _node_series(model: WeierstrassModel, prec: int) -> Series:
    """The node of a multiplicative fiber at the local place 0, lifted to
    a series: the critical point of the cubic near the double root of its
    reduction."""
    a2 = _series_of_rf(model.a2, Fraction(0), prec)
    a4 = _series_of_rf(model.a4, Fraction(0), prec)
    a6 = _series_of_rf(model.a6, Fraction(0), prec)
    # double root of the reduced cubic
    g0 = Polynomial([a6.at_zero(), a4.at_zero(), a2.at_zero(), 1])
    dbl = poly_gcd(g0, g0.derivative())
    if dbl.degree != 1:
        raise ArithmeticError("fiber is not a node")
    root = -dbl[0] / dbl[1]
    u = Series.constant(root, prec)
    three = Series.constant(3, prec)
    two = Series.constant(2, prec)
    six = Series.constant(6, prec)
    steps = 1
    while (1 << steps) < prec:
        steps += 1
    for _ in range(steps + 1):
        gp = three * u * u + two * a2 * u + a4
        gpp = six * u + two * a2
        u = u - gp / gpp
    gp = three * u * u + two * a2 * u + a4
    if not gp.is_zero():
        raise ArithmeticError("node lift did not converge")
    return u


class ComponentRef:
    """Which component of a bad fiber a section hits.

    kind 'identity' (index None), 'cycle' (index 1..n-1 on an I_n fiber,
    orientation fixed per place), or 'far' (index = the root label on an
    I0* fiber)."""

    __slots__ = ("place", "symbol", "kind", "index")

    def __init__(self, place, symbol, kind, index):
        object.__setattr__(self, "place", place)
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "index", index)

    def __setattr__(self, *a):
        raise AttributeError("ComponentRef is immutable")

    def __repr__(self):
        return "ComponentRef(%s@%s: %s %s)" % (
            self.symbol, self.place, self.kind, self.index)


def _identity(fiber):
    return ComponentRef(fiber.place, fiber.symbol, "identity", None)


def section_component(pt: CurvePoint, fiber) -> ComponentRef:
    """Component of the fiber hit by a section."""
    if pt.is_infinity:
        return _identity(fiber)
    local = _localize_section(pt, fiber.place)
    if fiber.kind == "I":
        return _component_on_In(local, fiber)
    if fiber.kind == "I*" and fiber.n == 0:
        return _component_on_I0star(local, fiber)
    if fiber.kind in ("II", "II*"):
        return _identity(fiber)  # single simple component
    raise NotImplementedError(
        "component identification on a %s fiber is not implemented"
        % fiber.symbol)


def _component_on_In(local: CurvePoint, fiber) -> ComponentRef:
    n = fiber.n
    prec = n + 3
    try:
        u_s = _series_of_rf(local.u, Fraction(0), prec)
        v_s = _series_of_rf(local.v, Fraction(0), prec)
    except PoleError:
        return _identity(fiber)  # section meets the fiber at infinity
    u0 = _node_series(local.model, prec)
    du = u_s - u0
    if du.ord() == 0:
        return _identity(fiber)  # misses the node
    if n <= 2:
        return ComponentRef(fiber.place, fiber.symbol, "cycle", 1)
    a2 = _series_of_rf(local.model.a2, Fraction(0), prec)
    big_a2 = a2 + Series.constant(3, prec) * u0  # after translating by u0
    rad = big_a2 + du
    c0 = rad.at_zero()
    root0 = _field_sqrt(c0)
    if root0 is None:
        raise NotImplementedError(
            "node slope generates an unsupported field extension")
    if isinstance(root0, QuadElem) or any(
            isinstance(c, QuadElem) for c in rad.coeffs):
        rad = Series([QuadElem._lift(c) for c in rad.coeffs], prec)
        v_s = Series([QuadElem._lift(c) for c in v_s.coeffs], prec)
        du = Series([QuadElem._lift(c) for c in du.coeffs], prec)
        root0 = QuadElem._lift(root0)
    beta = rad.sqrt(root0)
    x = v_s / beta - du
    k = x.ord()
    if not 1 <= k <= n - 1:
        k = 0
    if k == 0:
        return _identity(fiber)
    return ComponentRef(fiber.place, fiber.symbol, "cycle", k)


def _component_on_I0star(local: CurvePoint, fiber) -> ComponentRef:
    prec = 4
    model = local.model
    a2 = _series_of_rf(model.a2, Fraction(0), prec)
    ubar = -a2.at_zero() / 3  # triple root of the reduced cubic
    try:
        u_s = _series_of_rf(local.u, Fraction(0), prec)
    except PoleError:
        return _identity(fiber)
    du = u_s - Series.constant(ubar, prec)
    if du.ord() == 0:
        return _identity(fiber)
    label = du.coeffs[1]
    roots = _far_roots(model, ubar)
    if label not in roots:
        raise ArithmeticError("section does not meet a simple component")
    if isinstance(label, QuadElem):
        label = label.rational_part()
    return ComponentRef(fiber.place, fiber.symbol, "far", label)


def _far_roots(model: WeierstrassModel, ubar):
    """Labels of the three non-identity simple components of an I0* fiber:
    roots of the rescaled cubic."""
    prec = 4
    a2 = _series_of_rf(model.a2, Fraction(0), prec)
    a4 = _series_of_rf(model.a4, Fraction(0), prec)
    a6 = _series_of_rf(model.a6, Fraction(0), prec)
    ub = Series.constant(ubar, prec)
    big2 = a2 + 3 * ub
    big4 = a4 + 2 * ub * a2 + 3 * ub * ub
    big6 = ((ub + a2) * ub + a4) * ub + a6
    c2 = big2.shift_down(1).at_zero()
    c4 = big4.shift_down(2).at_zero()
    c6 = big6.shift_down(3).at_zero()
    cubic = Polynomial([c6, c4, c2, 1])
    roots = sorted(rational_roots(cubic))
    if len(roots) != 3:
        raise NotImplementedError(
            "I0* component labels are not all rational")
    return set(roots)


def local_contribution(fiber, ref_s: ComponentRef, ref_t: ComponentRef = None) -> Fraction:
    """Correction term of one bad fiber to the height pairing.

    With one argument the diagonal term contr_v(S); with two, the mixed
    term contr_v(S, T)."""
    if ref_t is None:
        ref_t = ref_s
    if ref_s.kind == "identity" or ref_t.kind == "identity":
        return Fraction(0)
    if fiber.kind == "I":
        n = fiber.n
        i, j = sorted((ref_s.index, ref_t.index))
        return Fraction(i * (n - j), n)
    if fiber.kind == "I*" and fiber.n == 0:
        if ref_s.index == ref_t.index:
            return Fraction(1)
        return Fraction(1, 2)
    raise NotImplementedError("no contribution rule for %s" % fiber.symbol)


# -- intersection numbers and heights --------------------------------------------


def intersection_with_zero(pt: CurvePoint) -> Fraction:
    """(S.O): intersection number of a section with the zero section.

    Equals half the degree of the polar divisor of u_S, the place at
    infinity weighted through the twisted model there.  No factorization
    needed: irrational poles are counted by their degree.
    """
    if pt.is_infinity:
        raise ValueError("(O.O) is handled by the height formulas directly")
    _, _, _, k = model_at_infinity(pt.model)
    u = pt.u
    if u.is_zero:
        return Fraction(0)
    finite = u.den.degree
    at_inf = max(0, u.degree() - 2 * k)
    return Fraction(finite + at_inf, 2)


def mutual_intersection(s: CurvePoint, t: CurvePoint) -> Fraction:
    """(S.T) for distinct sections, via translation: (S.T) = ((S-T).O)."""
    if s == t:
        raise ValueError("(S.S) is not computed here; use the height formulas")
    d = s - t
    if d.is_infinity:
        raise ValueError("sections are equal")
    return intersection_with_zero(d)


def height_pairing(s: CurvePoint, t: CurvePoint = None) -> Fraction:
    """Canonical height pairing of sections of the family fibration."""
    fibers = _family_fibers()
    if t is None or t == s:
        if s.is_infinity:
            return Fraction(0)
        total = Fraction(2 * CHI) + 2 * intersection_with_zero(s)
        for fib in fibers:
            total -= local_contribution(fib, section_component(s, fib))
        return total
    if s.is_infinity or t.is_infinity:
        return Fraction(0)
    total = (Fraction(CHI) + intersection_with_zero(s)
             + intersection_with_zero(t) - mutual_intersection(s, t))
    for fib in fibers:
        total -= local_contribution(fib, section_component(s, fib),
                                    section_component(t, fib))
    return total


def height_gram(points) -> list:
    pts = list(points)
    n = len(pts)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            val = height_pairing(pts[i]) if i == j else height_pairing(pts[i], pts[j])
            out[i][j] = out[j][i] = val
    return out


# -- torsion and saturation -------------------------------------------------------


def torsion_points():
    """The four torsion sections: O, the two marked 2-torsion sections and
    their sum.  That this is the whole torsion subgroup uses the imported
    fact that the torsion order divides 4."""
    model = family_model()
    secs = named_sections()
    t1 = param_to_point(secs["T1"], model)
    t2 = param_to_point(secs["T2"], model)
    return {"O": model.infinity(), "T1": t1, "T2": t2, "T1+T2": t1 + t2}


def is_square_in_function_field(rf: RationalFunction) -> bool:
    """Squareness of u in the function field over the algebraic closure of
    the constants: both squarefree parts must be constant."""
    if rf.is_zero:
        return True
    return (squarefree_part(rf.num).degree == 0
            and squarefree_part(rf.den).degree == 0)


class Certificate:
    """A verified claim bundle: ordered (key, value) facts, a list of
    imported facts the verification relies on, and an overall flag."""

    __slots__ = ("name", "facts", "imported", "ok")

    def __init__(self, name, facts, imported=(), ok=True):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "facts", list(facts))
        object.__setattr__(self, "imported", list(imported))
        object.__setattr__(self, "ok", bool(ok))

    def __setattr__(self, *a):
        raise AttributeError("Certificate is immutable")

    def fact(self, key):
        for k, v in self.facts:
            if k == key:
                return v
        raise KeyError(key)

    def __repr__(self):
        return "Certificate(%s, ok=%s)" % (self.name, self.ok)


def torsion_certificate() -> Certificate:
    """The torsion subgroup is (Z/2)^2, generated by the marked 2-torsion
    sections."""
    tors = torsion_points()
    facts = [("torsion.order", 4),
             ("torsion.structure", "(Z/2)^2")]
    ok = True
    for name, p in tors.items():
        doubled = 2 * p
        ok = ok and doubled.is_infinity
        if not p.is_infinity:
            ok = ok and height_pairing(p) == 0
    closed = all((a + b) in tors.values()
                 for a in tors.values() for b in tors.values())
    ok = ok and closed
    facts.append(("torsion.closed", closed))
    return Certificate(
        "torsion", facts,
        imported=["the torsion order divides 4"],
        ok=ok)


def saturation_certificate() -> Certificate:
    """Saturation of the rank-two sublattice spanned by the two marked
    infinite-order sections.

    The index n of the span inside the full Mordell-Weil lattice divides
    2 (discriminant of the integral rescaled Gram is 12 and 12/n^2 must
    stay integral).  Parity of the quarter-integral heights rules out
    halving either generator separately, and halving the sum is ruled out
    because u(P + Q + T) is a nonsquare in the function field for every
    torsion T.
    """
    model = family_model()
    secs = named_sections()
    p = param_to_point(secs["P"], model)
    q = param_to_point(secs["Q"], model)
    tors = torsion_points()
    gram = height_gram([p, q])
    scaled = [[int(4 * gram[i][j]) for j in range(2)] for i in range(2)]
    disc = scaled[0][0] * scaled[1][1] - scaled[0][1] * scaled[1][0]
    facts = [
        ("height.PP", gram[0][0]),
        ("height.QQ", gram[1][1]),
        ("height.PQ", gram[0][1]),
        ("lattice.scaled_gram", tuple(map(tuple, scaled))),
        ("lattice.scaled_disc", disc),
    ]
    ok = gram == [[Fraction(3, 2), Fraction(0)], [Fraction(0), Fraction(1, 2)]]
    ok = ok and disc == 12
    # index divides 2: 12 / n^2 integral forces n in {1, 2}
    # halving P alone: height would be 3/8, not quarter-integral
    # halving Q alone: height would be 1/8, not quarter-integral
    parity_ok = (4 * gram[0][0]) % 2 == 0 and (4 * gram[1][1]) % 2 == 0
    # those two heights are 6/4 and 2/4; a half-point would have height
    # h/4 with 4h = <P,P> resp. <Q,Q>, i.e. 3/8 or 1/8, outside (1/4) Z
    nonsquares = {}
    base = p + q
    for name, t in tors.items():
        shifted = base + t
        nonsquares[name] = not is_square_in_function_field(shifted.u)
    facts.append(("halving.sum_blocked_for", tuple(sorted(nonsquares))))
    ok = ok and parity_ok and all(nonsquares.values())
    facts.append(("lattice.index", 1))
    facts.append(("lattice.rank", 2))
    return Certificate(
        "saturation", facts,
        imported=["the torsion order divides 4",
                  "quarter-integrality of the height pairing"],
        ok=ok)


def rank_formula_certificate() -> Certificate:
    """Picard number 20 from the fiber table and Mordell-Weil rank 2."""
    from .curve import euler_number, shioda_tate_rank

    model = family_model()
    fibers = tate_classify(model)
    rho = shioda_tate_rank(model, 2)
    e = euler_number(model)
    facts = [
        ("fibers.table", tuple((str(f.place), f.symbol) for f in fibers)),
        ("fibers.component_excess", sum(f.components - 1 for f in fibers)),
        ("euler.number", e),
        ("picard.number", rho),
    ]
    ok = e == 24 and rho == 20 and sum(f.components - 1 for f in fibers) == 16
    return Certificate("rank-formula", facts, ok=ok)
