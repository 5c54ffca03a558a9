"""Elliptic fibration machinery over the rational function field.

The surface of `zerodiag.surface` is fibered by the parameter t = x/a.
After a coordinate change each fiber becomes a Weierstrass cubic

    v^2 = u (u - 8t(t^2-1)) (u - (t^2-1)(t+2)^2)

and curves on the surface that meet each fiber once correspond to points
of this curve over Q(t) (or Q(sqrt 3)(t)).  This module implements
Weierstrass models and their invariants, the group law, Kodaira fiber
classification by valuations of (c4, c6, Delta), and the explicit maps in
both directions between section parametrizations and Weierstrass points.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exactnum import (
    Polynomial,
    QuadElem,
    RationalFunction,
    SQRT3,
    conj,
    poly_gcd,
    poly_sqrt,
    rational_roots,
)
from .surface import Parametrization

INFINITE_PLACE = "inf"

_BIG = 10 ** 9  # valuation of the zero function, for comparisons only


def _rf(x) -> RationalFunction:
    out = RationalFunction._lift(x)
    if out is None:
        raise TypeError("expected a function-field element, got %r" % (x,))
    return out


def ratfunc_sqrt(rf: RationalFunction):
    """A square root of rf in the function field, or None.

    num/den = (num*den)/den^2, so rf is a square iff num*den is a square
    polynomial.
    """
    rf = _rf(rf)
    if rf.is_zero:
        return RationalFunction(0)
    root = poly_sqrt(rf.num * rf.den)
    if root is None:
        return None
    return RationalFunction(root, rf.den)


class WeierstrassModel:
    """v^2 = u^3 + a2 u^2 + a4 u + a6 with function-field coefficients."""

    __slots__ = ("a2", "a4", "a6")

    def __init__(self, a2, a4, a6):
        object.__setattr__(self, "a2", _rf(a2))
        object.__setattr__(self, "a4", _rf(a4))
        object.__setattr__(self, "a6", _rf(a6))
        if self.discriminant().is_zero:
            raise ValueError("discriminant vanishes identically; "
                             "the generic fiber is singular")

    def __setattr__(self, *a):
        raise AttributeError("WeierstrassModel is immutable")

    # b- and c-invariants for a1 = a3 = 0
    def b_invariants(self):
        a2, a4, a6 = self.a2, self.a4, self.a6
        return 4 * a2, 2 * a4, 4 * a6, 4 * a2 * a6 - a4 * a4

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def discriminant(self) -> RationalFunction:
        b2, b4, b6, b8 = self.b_invariants()
        return (-b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6
                + 9 * b2 * b4 * b6)

    def j_invariant(self) -> RationalFunction:
        c4, _ = self.c_invariants()
        return c4 ** 3 / self.discriminant()

    def rhs(self, u):
        u = _rf(u)
        return ((u + self.a2) * u + self.a4) * u + self.a6

    def contains(self, u, v) -> bool:
        v = _rf(v)
        return v * v == self.rhs(u)

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def point(self, u, v) -> "CurvePoint":
        return CurvePoint(self, u, v)

    def __eq__(self, other):
        if not isinstance(other, WeierstrassModel):
            return NotImplemented
        return (self.a2, self.a4, self.a6) == (other.a2, other.a4, other.a6)

    def __hash__(self):
        return hash((self.a2, self.a4, self.a6))

    def __repr__(self):
        return "WeierstrassModel(a2=%s, a4=%s, a6=%s)" % (
            self.a2, self.a4, self.a6)


class CurvePoint:
    """A point of a Weierstrass model over the function field."""

    __slots__ = ("model", "u", "v")

    def __init__(self, model, u, v):
        object.__setattr__(self, "model", model)
        if u is None and v is None:
            object.__setattr__(self, "u", None)
            object.__setattr__(self, "v", None)
            return
        u, v = _rf(u), _rf(v)
        if not model.contains(u, v):
            raise ValueError("point is not on the curve: u=%s v=%s" % (u, v))
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, *a):
        raise AttributeError("CurvePoint is immutable")

    @property
    def is_infinity(self) -> bool:
        return self.u is None

    def __neg__(self):
        if self.is_infinity:
            return self
        return CurvePoint(self.model, self.u, -self.v)

    def __add__(self, other):
        if not isinstance(other, CurvePoint) or other.model != self.model:
            return NotImplemented
        if self.is_infinity:
            return other
        if other.is_infinity:
            return self
        m = self.model
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        if u1 == u2:
            if v1 == -v2:
                return m.infinity()
            lam = (3 * u1 * u1 + 2 * m.a2 * u1 + m.a4) / (2 * v1)
        else:
            lam = (v2 - v1) / (u2 - u1)
        u3 = lam * lam - m.a2 - u1 - u2
        v3 = lam * (u1 - u3) - v1
        return CurvePoint(m, u3, v3)

    def __sub__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (-n) * (-self)
        out = self.model.infinity()
        base = self
        while n:
            if n & 1:
                out = out + base
            base = base + base
            n >>= 1
        return out

    def conjugate(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.model, conj(self.u), conj(self.v))

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.model == other.model and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        if self.is_infinity:
            return "CurvePoint(infinity)"
        return "CurvePoint(u=%s, v=%s)" % (self.u, self.v)


def family_model() -> WeierstrassModel:
    """The Weierstrass form of the fibration of the matrix surface."""
    t = Polynomial.gen()
    e2 = 8 * t * (t * t - 1)
    e3 = (t * t - 1) * (t + 2) ** 2
    return WeierstrassModel(-(e2 + e3), e2 * e3, 0)


def family_two_torsion_u():
    """u-coordinates of the three finite 2-torsion points of the family."""
    t = Polynomial.gen()
    return Polynomial(), 8 * t * (t * t - 1), (t * t - 1) * (t + 2) ** 2


# -- Kodaira fiber classification ---------------------------------------------


class LocalFiber:
    """Classification data of one fiber of an elliptic surface."""

    __slots__ = ("place", "symbol", "kind", "n", "components", "simple",
                 "delta", "alpha", "beta")

    def __init__(self, place, kind, n, delta, alpha, beta):
        m, m1, symbol = _fiber_shape(kind, n)
        object.__setattr__(self, "place", place)
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "components", m)
        object.__setattr__(self, "simple", m1)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def __setattr__(self, *a):
        raise AttributeError("LocalFiber is immutable")

    def __repr__(self):
        return "LocalFiber(%s at %s)" % (self.symbol, self.place)


def _fiber_shape(kind, n):
    """(component count, simple component count, printed symbol)."""
    if kind == "I":
        return max(n, 1), max(n, 1), "I%d" % n
    if kind == "I*":
        return n + 5, 4, "I%d*" % n
    shapes = {"II": (1, 1), "III": (2, 2), "IV": (3, 3),
              "IV*": (7, 3), "III*": (8, 2), "II*": (9, 1)}
    m, m1 = shapes[kind]
    return m, m1, kind


def _shift_rf(rf: RationalFunction, r) -> RationalFunction:
    return RationalFunction(rf.num.shift(r), rf.den.shift(r))


def _ord0(rf: RationalFunction) -> int:
    return _BIG if rf.is_zero else rf.ord_at(Fraction(0))


def _classify_local(a2, a4, a6, place):
    """Tate classification at the place t = 0 of a local model.

    Residue characteristic zero, so only the valuations of c4, c6 and
    Delta matter, after enforcing minimality (all of alpha >= 4,
    beta >= 6, delta >= 12 allows rescaling by the uniformizer).
    """
    t = RationalFunction(Polynomial.gen())
    while True:
        model = WeierstrassModel(a2, a4, a6)
        c4, c6 = model.c_invariants()
        dlt = model.discriminant()
        alpha, beta, delta = _ord0(c4), _ord0(c6), _ord0(dlt)
        if alpha >= 4 and beta >= 6 and delta >= 12:
            a2 = a2 / t ** 2
            a4 = a4 / t ** 4
            a6 = a6 / t ** 6
            continue
        break
    if delta == 0:
        return LocalFiber(place, "I", 0, delta, alpha, beta)
    if alpha == 0:
        return LocalFiber(place, "I", delta, delta, alpha, beta)
    if delta == 2:
        return LocalFiber(place, "II", 0, delta, alpha, beta)
    if delta == 3:
        return LocalFiber(place, "III", 0, delta, alpha, beta)
    if delta == 4:
        return LocalFiber(place, "IV", 0, delta, alpha, beta)
    if delta == 6:
        return LocalFiber(place, "I*", 0, delta, alpha, beta)
    if alpha == 2 and beta == 3:
        return LocalFiber(place, "I*", delta - 6, delta, alpha, beta)
    if delta == 8:
        return LocalFiber(place, "IV*", 0, delta, alpha, beta)
    if delta == 9:
        return LocalFiber(place, "III*", 0, delta, alpha, beta)
    if delta == 10:
        return LocalFiber(place, "II*", 0, delta, alpha, beta)
    raise ArithmeticError("unclassifiable fiber at %s: "
                          "alpha=%s beta=%s delta=%s" % (place, alpha, beta, delta))


def model_at_infinity(model: WeierstrassModel):
    """The model in the coordinate s = 1/t, with the twist weight k used:
    a_i(t) -> s^(i k) a_i(1/s)."""
    degs = []
    for i, a in ((2, model.a2), (4, model.a4), (6, model.a6)):
        if not a.is_zero:
            d = a.degree()
            if d > 0:
                degs.append(-(-d // i))  # ceil
    k = max(degs, default=0)

    def transform(a, i):
        if a.is_zero:
            return a
        num, den = a.num, a.den
        # s^(ik) a(1/s) = s^(ik) num(1/s)/den(1/s)
        w = i * k
        shift = w - (num.degree - den.degree)
        rev_num = num.reverse(num.degree)
        rev_den = den.reverse(den.degree)
        s = Polynomial.gen()
        if shift >= 0:
            return RationalFunction(rev_num * s ** shift, rev_den)
        return RationalFunction(rev_num, rev_den * s ** (-shift))

    return (transform(model.a2, 2), transform(model.a4, 4),
            transform(model.a6, 6), k)


def fiber_at(model: WeierstrassModel, place) -> LocalFiber:
    """Kodaira type of the fiber at a rational place, or at infinity."""
    if place == INFINITE_PLACE:
        a2, a4, a6, _ = model_at_infinity(model)
        return _classify_local(a2, a4, a6, INFINITE_PLACE)
    r = Fraction(place)
    return _classify_local(_shift_rf(model.a2, r), _shift_rf(model.a4, r),
                           _shift_rf(model.a6, r), r)


def bad_places(model: WeierstrassModel):
    """Rational places where the discriminant vanishes, plus infinity if
    the fiber there is not smooth.  Raises if the discriminant has an
    irrational factor (residue field extensions are not implemented)."""
    dlt = model.discriminant()
    if not dlt.is_polynomial():
        raise NotImplementedError("discriminant with denominator")
    poly = dlt.as_polynomial()
    roots = rational_roots(poly)
    rebuilt = Polynomial([1])
    for r in roots:
        rebuilt = rebuilt * Polynomial([-r, 1]) ** poly.valuation_at(r)
    if rebuilt.degree != poly.degree:
        raise NotImplementedError(
            "discriminant has a nonrational factor; residue field "
            "extensions are not implemented")
    places = sorted(roots)
    inf = fiber_at(model, INFINITE_PLACE)
    return places, inf


def tate_classify(model: WeierstrassModel):
    """All singular fibers of the model, finite rational places first
    (sorted), then infinity."""
    places, inf_fiber = bad_places(model)
    out = []
    for r in places:
        fib = fiber_at(model, r)
        if fib.delta > 0:
            out.append(fib)
    if inf_fiber.delta > 0:
        out.append(inf_fiber)
    return out


def euler_number(model: WeierstrassModel) -> int:
    """Sum of the local discriminant valuations, infinity included.
    Equals 12 chi(O) for a relatively minimal elliptic surface; 24 here."""
    return sum(f.delta for f in tate_classify(model))


def shioda_tate_rank(model: WeierstrassModel, mw_rank: int) -> int:
    """Picard number from fiber data and a Mordell-Weil rank."""
    return 2 + mw_rank + sum(f.components - 1 for f in tate_classify(model))


# -- sections of the matrix surface fibration ---------------------------------


def named_sections():
    """The distinguished sections, as parametrizations with x = t a.

    O is the zero section, T1 and T2 are 2-torsion, P generates an
    infinite cyclic subgroup, and Q is defined over Q(sqrt 3) and maps to
    its own negative under conjugation.
    """
    t = Polynomial.gen()
    rt3 = SQRT3
    minus2 = Polynomial([-2])
    O = Parametrization(t ** 2, 2 - t ** 2, minus2, t, -t, 2 - t ** 2)
    P = Parametrization(t ** 2, 2 - t ** 2, minus2, t, t ** 2 - 2, t)
    T1 = Parametrization(t ** 2, 2 - t ** 2, minus2, t, t, t ** 2 - 2)
    T2 = Parametrization(t ** 2, minus2, 2 - t ** 2, t, 2 - t ** 2, -t)
    Q = Parametrization(
        2 * t ** 2 - rt3 * t,
        2 - rt3 * t,
        -2 + 2 * rt3 * t - 2 * t ** 2,
        2 * t - rt3,
        -1 + rt3 * t - t ** 2,
        2 * t - rt3 * t ** 2,
    )
    return {"O": O, "P": P, "T1": T1, "T2": T2, "Q": Q}


def param_to_point(par: Parametrization, model: WeierstrassModel = None) -> CurvePoint:
    """Weierstrass point of a section parametrization.

    The section must be in fibration-adapted form, meaning x = t a
    identically.  The zero section (characterized by a + b = 0) maps to
    the point at infinity.
    """
    if model is None:
        model = family_model()
    t = Polynomial.gen()
    if par.x != t * par.a:
        raise ValueError("parametrization is not fibration-adapted (x != t a)")
    if (par.a + par.b).is_zero:
        return model.infinity()
    x, y, z, a, b, c = (RationalFunction(p) for p in par.components())
    T = RationalFunction(t)
    nu = (x - c) / (a + b)
    lam = (T * T - 4) * nu + 3 * T
    mu = T * (T * T - 4) * (z - y) * (T * nu * nu - 2 * nu + T) / x
    u = (mu + lam * lam + T * (T * T - 1) * (T + 8)) / 2
    v = (mu * lam + lam ** 3 + (T * T - 1) * (T * T - 8) * lam
         - 8 * T * (T * T - 1) ** 2) / 2
    return CurvePoint(model, u, v)


def _clear_denominators(comps):
    """Scale rational-function components by a common polynomial to make
    all of them polynomials."""
    lcm = Polynomial([1])
    for c in comps:
        g = poly_gcd(lcm, c.den)
        lcm = lcm * c.den.exact_div(g) if g.degree > 0 else lcm * c.den
    out = []
    for c in comps:
        out.append((c * RationalFunction(lcm)).as_polynomial())
    return out


def point_to_param(pt: CurvePoint, check: bool = True) -> Parametrization:
    """Section parametrization of a Weierstrass point of the family model.

    Inverts param_to_point.  Raises ValueError when the inversion
    denominator u - 4(t-1)(t+1)^2 vanishes identically (two sections of
    the family are genuinely outside this chart) and ArithmeticError if
    the branch discriminant is not a function-field square, which cannot
    happen for actual sections.
    """
    if pt.model != family_model():
        raise ValueError("point is not on the family model")
    t = Polynomial.gen()
    T = RationalFunction(t)
    if pt.is_infinity:
        return named_sections()["O"]
    den = pt.u - 4 * (T - 1) * (T + 1) ** 2
    if den.is_zero:
        raise ValueError("inversion denominator identically zero; "
                         "this section is outside the chart")
    lam = (pt.v + 4 * T * (T * T - 1) ** 2) / den
    nu = (lam - 3 * T) / (T * T - 4)
    mu = 2 * pt.u - lam * lam - T * (T * T - 1) * (T + 8)
    den2 = (T * T - 4) * (T * (nu * nu + 1) - 2 * nu)
    if den2.is_zero:
        raise ValueError("chart degeneracy: the component denominator vanishes")
    y = -(T + mu / den2) / 2
    z = -T - y
    if nu.is_zero:
        bs = [-y * (T + y) / 2]
    else:
        disc = 4 * (T - nu) ** 2 + 8 * nu * T * y * (T + y)
        root = ratfunc_sqrt(disc)
        if root is None:
            raise ArithmeticError("branch discriminant is not a square; "
                                  "the input is not a section")
        bs = [(2 * (T - nu) + root) / (4 * nu),
              (2 * (T - nu) - root) / (4 * nu)]
    chosen = None
    for b in bs:
        cc = T - nu * (1 + b)
        f2 = T * y + y * z + z * T + 1 + b * b + cc * cc
        if f2.is_zero:
            chosen = (b, cc)
            break
    if chosen is None:
        raise ArithmeticError("no branch satisfies the surface equations")
    b, cc = chosen
    comps = _clear_denominators([T * 1, y, z, RationalFunction(1), b, cc])
    par = Parametrization(*comps).normalized()
    if check:
        if not par.verify():
            raise ArithmeticError("inverted parametrization fails verification")
        if param_to_point(par) != pt:
            raise ArithmeticError("round trip failed")
    return par
