"""Exact arithmetic substrate: rationals, Q(sqrt 3), dense polynomials,
rational functions.

Everything here is exact.  Floats are rejected on input and never produced.
Rationals are stdlib ``fractions.Fraction``; the quadratic field Q(sqrt 3)
gets its own small class because Galois conjugation (sqrt 3 -> -sqrt 3) has
to be a first-class operation.  Polynomials are dense with coefficients
listed lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import isqrt


Rat = Fraction


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a pole."""


def rat(x) -> Fraction:
    """Coerce an int, string or Fraction to Fraction. Floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass Fraction or int")
    return Fraction(x)


def rat_sqrt(x: Fraction):
    """Exact square root of a rational, or None if x is not a square."""
    x = rat(x)
    if x < 0:
        return None
    pn, pd = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def isqrt_fraction(x: Fraction) -> int:
    # floor(sqrt(x)) for x >= 0; exact because k^2 <= x <=> k^2 <= floor(x).
    if x < 0:
        raise ValueError("negative argument")
    return isqrt(int(x))


class QuadElem:
    """Element r + s*sqrt(3) of Q(sqrt 3), with exact Fraction components."""

    __slots__ = ("r", "s")

    def __init__(self, r=0, s=0):
        object.__setattr__(self, "r", rat(r))
        object.__setattr__(self, "s", rat(s))

    def __setattr__(self, *a):
        raise AttributeError("QuadElem is immutable")

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "QuadElem":
        """Galois conjugation sqrt(3) -> -sqrt(3)."""
        return QuadElem(self.r, -self.s)

    def norm(self) -> Fraction:
        return self.r * self.r - 3 * self.s * self.s

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def rational_part(self) -> Fraction:
        if self.s != 0:
            raise ValueError("not a rational element: %s" % self)
        return self.r

    def is_positive(self) -> bool:
        """Sign under the real embedding sqrt(3) > 0, computed exactly."""
        r, s = self.r, self.s
        if s == 0:
            return r > 0
        if r == 0:
            return s > 0
        if r > 0 and s > 0:
            return True
        if r < 0 and s < 0:
            return False
        # signs differ: compare r^2 with 3 s^2
        return (r * r > 3 * s * s) if r > 0 else (r * r < 3 * s * s)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, QuadElem):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadElem(x, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.r, -self.s)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.r - o.r, self.s - o.s)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.r * o.r + 3 * self.s * o.s,
                        self.r * o.s + self.s * o.r)

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of Q(sqrt 3)")
        return QuadElem(self.r / n, -self.s / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = QuadElem(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.r == o.r and self.s == o.s

    def __hash__(self):
        return hash((self.r, self.s)) if self.s else hash(self.r)

    def __bool__(self):
        return bool(self.r or self.s)

    def __repr__(self):
        return "QuadElem(%r, %r)" % (str(self.r), str(self.s))

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        return "(%s)+(%s)√3" % (self.r, self.s)


SQRT3 = QuadElem(0, 1)


def quad_sqrt(x):
    """Exact square root inside Q(sqrt 3), or None.

    Solves (p + q sqrt3)^2 = r + s sqrt3 via p^2 + 3 q^2 = r, 2 p q = s.
    """
    x = QuadElem._lift(x)
    if x is None:
        raise TypeError("not a field element")
    r, s = x.r, x.s
    if s == 0:
        root = rat_sqrt(r)
        if root is not None:
            return QuadElem(root, 0)
        if r < 0:
            return None
        alt = rat_sqrt(r / 3)  # sqrt(r) = sqrt(r/3)*sqrt(3)
        if alt is not None:
            return QuadElem(0, alt)
        return None
    d = rat_sqrt(r * r - 3 * s * s)
    if d is None:
        return None
    for p2 in ((r + d) / 2, (r - d) / 2):
        p = rat_sqrt(p2)
        if p is not None and p != 0:
            q = s / (2 * p)
            cand = QuadElem(p, q)
            if cand * cand == x:
                return cand
    return None


def conj(x):
    """Galois conjugation, lifted through the number tower."""
    if isinstance(x, QuadElem):
        return x.conjugate()
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, Polynomial):
        return Polynomial([conj(c) for c in x.coeffs])
    if isinstance(x, RationalFunction):
        return RationalFunction(conj(x.num), conj(x.den))
    raise TypeError("cannot conjugate %r" % type(x))


def _coerce_pair(a, b):
    """Bring two coefficients into a common field (Q or Q(sqrt 3))."""
    if isinstance(a, QuadElem) or isinstance(b, QuadElem):
        return QuadElem._lift(a), QuadElem._lift(b)
    return rat(a), rat(b)


def field_zero_one(sample):
    if isinstance(sample, QuadElem):
        return QuadElem(0), QuadElem(1)
    return Fraction(0), Fraction(1)


class Polynomial:
    """Dense univariate polynomial, coefficients lowest degree first.

    Coefficients live in Q or Q(sqrt 3); a mixed list is lifted to the
    larger field.  The zero polynomial has an empty coefficient list and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        lifted = []
        quad = any(isinstance(c, QuadElem) for c in coeffs)
        for c in coeffs:
            if isinstance(c, float):
                raise TypeError("floats are not exact")
            lifted.append(QuadElem._lift(c) if quad else rat(c))
        while lifted and not lifted[-1]:
            lifted.pop()
        object.__setattr__(self, "coeffs", tuple(lifted))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def gen(cls):
        """The generator t."""
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_quadratic_field(self) -> bool:
        return any(isinstance(c, QuadElem) for c in self.coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction, QuadElem)):
            return Polynomial([x])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Polynomial()
        a, b = self.coeffs, o.coeffs
        za, _ = field_zero_one(a[0] if a else 0)
        out = [za] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = list(o.coeffs)
        dq = len(dv) - 1
        inv_lead = 1 / dv[-1] if not isinstance(dv[-1], QuadElem) else dv[-1].inverse()
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c * inv_lead
            quot[i - dq] = q
            for j in range(dq + 1):
                rem[i - dq + j] = rem[i - dq + j] - q * dv[j]
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("not an exact polynomial division")
        return q

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(self.coeffs) != len(o.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __bool__(self):
        return not self.is_zero

    # -- calculus / transforms ----------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            zero, _ = field_zero_one(x)
            return zero
        return acc

    def shift(self, c) -> "Polynomial":
        """f(t + c), via Horner in (t + c)."""
        tc = Polynomial([c, 1])
        out = Polynomial()
        for coeff in reversed(self.coeffs):
            out = out * tc + coeff
        return out

    def reverse(self, k=None) -> "Polynomial":
        """t^k f(1/t) for k >= deg f (default k = deg f)."""
        if self.is_zero:
            return self
        if k is None:
            k = self.degree
        if k < self.degree:
            raise ValueError("reversal weight below degree")
        pad = [Fraction(0)] * (k - self.degree)
        return Polynomial(pad + list(reversed(self.coeffs)))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.lead()
        inv = 1 / lead if not isinstance(lead, QuadElem) else lead.inverse()
        return Polynomial([c * inv for c in self.coeffs])

    def _normalized_int(self) -> "Polynomial":
        # scale by a rational so coefficient entries are small coprime ints;
        # keeps Euclidean remainder sequences from blowing up.
        if self.is_zero:
            return self
        nums, dens = [], []
        for c in self.coeffs:
            parts = (c.r, c.s) if isinstance(c, QuadElem) else (c,)
            for p in parts:
                nums.append(p.numerator)
                dens.append(p.denominator)
        m = 1
        for d in dens:
            m = m * d // _int_gcd(m, d)
        scaled = [c * m for c in self.coeffs]
        g = 0
        for c in scaled:
            parts = (c.r, c.s) if isinstance(c, QuadElem) else (c,)
            for p in parts:
                g = _int_gcd(g, abs(p.numerator))
        if g > 1:
            scaled = [c / g for c in scaled]
        return Polynomial(scaled)

    def valuation_at(self, root) -> int:
        """Multiplicity of (t - root) in self; 0 if not a root."""
        if self.is_zero:
            raise ValueError("valuation of the zero polynomial")
        f, k = self, 0
        lin = Polynomial([-root, 1])
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero:
                return k
            f, k = q, k + 1

    def __repr__(self):
        return "Polynomial(%s)" % (list(map(str, self.coeffs)),)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append("%s*t" % cs)
            else:
                parts.append("%s*t^%d" % (cs, i))
        return " + ".join(parts)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm with content normalization."""
    a, b = a._normalized_int(), b._normalized_int()
    while not b.is_zero:
        a, b = b, (a % b)._normalized_int()
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(f: Polynomial):
    """Yun's algorithm: return [(g1, 1), (g2, 2), ...] with f = lc * prod gi^i."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    f = f.monic()
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        i += 1
    return out


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the irreducible factors of f of odd multiplicity.

    That is the square class of f in F(t)^* / squares up to a constant:
    f / squarefree_part(f) is a perfect square times a constant.
    """
    out = Polynomial([1])
    for g, mult in squarefree_decomposition(f):
        if mult % 2 == 1:
            out = out * g
    return out


def poly_sqrt(f: Polynomial):
    """Exact g with g^2 = f, or None.  Works over Q and Q(sqrt 3)."""
    if f.is_zero:
        return Polynomial()
    if f.degree % 2 == 1:
        return None
    lead = f.lead()
    root = quad_sqrt(lead) if isinstance(lead, QuadElem) else rat_sqrt(lead)
    if root is None:
        return None
    half = f.degree // 2
    # build g from the top coefficient down
    g = [Fraction(0)] * (half + 1)
    g[half] = root
    two_lead = root + root
    inv = two_lead.inverse() if isinstance(two_lead, QuadElem) else 1 / two_lead
    for k in range(half - 1, -1, -1):
        # coefficient of t^(half + k) in f must match 2*g[half]*g[k] + known
        known = Fraction(0)
        for i in range(k + 1, half):
            j = half + k - i
            if k + 1 <= j <= half:
                known = known + g[i] * g[j]
        target = f[half + k] - known
        g[k] = target * inv
    cand = Polynomial(g)
    return cand if cand * cand == f else None


def _divisors(n: int):
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of zero")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: Polynomial):
    """All rational roots of f, by the rational root theorem.

    Coefficients must be rational (a Q(sqrt 3) polynomial is accepted only
    when every coefficient is rational).  Returns a set of Fractions.
    """
    if f.is_zero:
        raise ValueError("every rational is a root of the zero polynomial")
    coeffs = []
    for c in f.coeffs:
        if isinstance(c, QuadElem):
            c = c.rational_part()
        coeffs.append(rat(c))
    roots = set()
    low = 0
    while not coeffs[low]:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots
    m = 1
    for c in coeffs:
        m = m * c.denominator // _int_gcd(m, c.denominator)
    ints = [int(c * m) for c in coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
    ints = [v // g for v in ints]
    a0, an = ints[0], ints[-1]

    def val(r):
        acc = 0
        for c in reversed(ints):
            acc = acc * r + c
        return acc

    for p in _divisors(a0):
        for q in _divisors(an):
            if _int_gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and val(cand) == 0:
                    roots.add(cand)
    return roots


class RationalFunction:
    """Quotient of polynomials, gcd-reduced, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Polynomial._lift(num)
        den = Polynomial([1]) if den is None else Polynomial._lift(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Polynomial([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.lead()
            inv = lead.inverse() if isinstance(lead, QuadElem) else 1 / lead
            num = num * inv
            den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, QuadElem, Polynomial)):
            return RationalFunction(Polynomial._lift(x))
        return None

    @property
    def is_zero(self):
        return self.num.is_zero

    def is_polynomial(self):
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %s" % self)
        return self.num

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            da, db = self.den.exact_div(g), o.den.exact_div(g)
            return RationalFunction(self.num * db + o.num * da,
                                    self.den * db)
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # cross-cancel before multiplying to keep degrees down
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RationalFunction(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __call__(self, x):
        dv = self.den(x)
        if not dv:
            raise PoleError("evaluation at a pole")
        return self.num(x) / dv

    def degree(self) -> int:
        """deg num - deg den; the order of growth at infinity."""
        if self.is_zero:
            raise ValueError("degree of zero rational function")
        return self.num.degree - self.den.degree

    def ord_at(self, root) -> int:
        """Valuation at the place t = root (positive = zero, negative = pole)."""
        if self.is_zero:
            raise ValueError("valuation of zero")
        nv = self.num.valuation_at(root)
        if nv > 0:
            return nv
        return -self.den.valuation_at(root)

    def ord_at_infinity(self) -> int:
        if self.is_zero:
            raise ValueError("valuation of zero")
        return -self.degree()

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def __str__(self):
        if self.den == Polynomial([1]):
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


def format_scalar(x) -> str:
    """Serialization used by the CLI: "p/q" or "(p/q)+(r/s)sqrt3 glyph"."""
    if isinstance(x, QuadElem):
        return str(x)
    return str(rat(x))
