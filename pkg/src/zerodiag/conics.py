"""Plane conics on the sextic surface and exact intersection numbers.

Every degree-2 curve on the surface is a smooth conic spanning a plane
inside the hyperplane x+y+z = 0, and is cut out on that plane by the
quadric q2 = xy+yz+zx+a^2+b^2+c^2 (the restriction of q2 to the plane of
any of the conics handled here is nonzero, so it is the conic's own
equation).  Intersection numbers of strict transforms on the resolved
surface reduce to linear algebra:

  * two distinct conics meet X along the intersection of their planes,
    a line or a point, where the scheme is cut out by q2;
  * blowing up an ordinary double point lowers a local intersection by
    one, so the corrected number is (total length) - (number of shared
    double points);
  * a conic meets the exceptional curve over a double point once iff it
    passes through the point;
  * the fiber class F satisfies F = H - [C0] for the fixed conic C0 cut
    out by x = a = 0, so F.C = 2 - C.C0 for any other conic.

All coefficients live in Q or Q(sqrt 3).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import QuadElem, quad_sqrt, rat, rat_sqrt
from .surface import g_apply, group_elements, normalize_projective, singular_points

_NVARS = 6  # coordinates (x, y, z, a, b, c)


def _entry(x):
    """Canonical field element: rational QuadElems become Fractions."""
    if isinstance(x, QuadElem):
        return x.rational_part() if x.is_rational else x
    return rat(x)


def _inv(x):
    return x.inverse() if isinstance(x, QuadElem) else 1 / x


def _field_sqrt(x):
    if isinstance(x, QuadElem):
        return quad_sqrt(x)
    root = rat_sqrt(x)
    if root is not None:
        return root
    return quad_sqrt(QuadElem(x, 0))


def rref(rows):
    """Reduced row echelon form over Q(sqrt 3); returns (rows, pivot cols)."""
    m = [[_entry(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(nc):
        piv = next((i for i in range(r, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][col])
        m[r] = [_entry(v * inv) for v in m[r]]
        for i in range(nr):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [_entry(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nr:
            break
    return [tuple(row) for row in m[:r]], pivots


def nullspace(rows):
    """Basis of the solution space of the linear forms."""
    reduced, pivots = rref(rows)
    nc = len(rows[0])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nc
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = _entry(-reduced[r][f])
        basis.append(tuple(vec))
    return basis


def q2(p):
    x, y, z, a, b, c = p
    return x * y + y * z + z * x + a * a + b * b + c * c


def q3(p):
    x, y, z, a, b, c = p
    return x * y * z - 2 * a * b * c


_SUM_XYZ = (1, 1, 1, 0, 0, 0)


@lru_cache(maxsize=1)
def double_points():
    """The twelve ordinary double points, projectively normalized."""
    return tuple(normalize_projective(p) for p in singular_points())


def _is_double_point(p):
    if any(isinstance(x, QuadElem) and not x.is_rational for x in p):
        return False
    pt = tuple(_entry(x) for x in p)
    return normalize_projective(pt) in double_points()


class Conic:
    """A plane conic on the surface, identified by its canonical plane."""

    __slots__ = ("rows",)

    def __init__(self, forms):
        rows, pivots = rref(list(forms) + [_SUM_XYZ])
        if len(rows) != 3:
            raise ValueError("plane of a conic must have codimension 3")
        object.__setattr__(self, "rows", tuple(rows))
        w = nullspace(self.rows)
        if _plane_form_det(w) == 0:
            raise ValueError("quadric is degenerate on the plane; not a "
                             "smooth conic")
        if not _cubic_divisible(w):
            raise ValueError("conic does not lie on the surface")

    def __setattr__(self, *a):
        raise AttributeError("Conic is immutable")

    def contains(self, p) -> bool:
        return (all(_dot(row, p) == 0 for row in self.rows)
                and q2(p) == 0)

    def double_points_on(self):
        return tuple(p for p in double_points() if self.contains(p))

    def contains_form(self, form) -> bool:
        """Whether a linear form vanishes on the whole conic (i.e. lies in
        the span of the plane's equations)."""
        rows, _ = rref(list(self.rows) + [form])
        return len(rows) == 3

    def transform(self, g) -> "Conic":
        mat = _group_matrix(g)
        new_rows = []
        for row in self.rows:
            # form' = form o g^{-1}; the inverse of a signed permutation
            # is its transpose
            new_rows.append(tuple(
                sum(row[i] * mat[j][i] for i in range(_NVARS))
                for j in range(_NVARS)))
        return Conic(new_rows)

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Conic(%s)" % (self.rows,)


def _dot(row, p):
    return sum(r * x for r, x in zip(row, p))


def _restrict_q2(basis):
    """Coefficients (A, B, C) of q2 on the span of one or two vectors;
    for a single vector returns (A,)."""
    if len(basis) == 1:
        return (q2(basis[0]),)
    w0, w1 = basis
    a = q2(w0)
    c = q2(w1)
    both = q2(tuple(u + v for u, v in zip(w0, w1)))
    return (a, both - a - c, c)


def _plane_form_det(basis):
    """Determinant of the Gram matrix of q2 on a 3-dimensional space;
    nonzero exactly when the restriction cuts a smooth conic."""
    n = len(basis)
    if n != 3:
        raise ValueError("expected a plane (three-dimensional span)")
    diag = [q2(w) for w in basis]
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * diag[i]
        for j in range(i + 1, n):
            s = q2(tuple(u + v for u, v in zip(basis[i], basis[j])))
            gram[i][j] = gram[j][i] = s - diag[i] - diag[j]
    a, b, c = gram[0]
    d, e, f = gram[1]
    g, h, k = gram[2]
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


def _cubic_divisible(basis):
    """Whether the cubic q3 restricted to the plane is a multiple of the
    restricted quadric, i.e. whether the conic lies on the surface.

    Both restrictions are forms in the three plane coordinates.  The
    multiplier, if any, is a linear form; solving for it on the grid
    {0,1,2,3}^3 is conclusive because a difference of degree three
    cannot vanish on four points per variable without vanishing
    identically.
    """
    rows = []
    for s0 in range(4):
        for s1 in range(4):
            for s2 in range(4):
                if s0 == s1 == s2 == 0:
                    continue
                p = tuple(s0 * u + s1 * v + s2 * w
                          for u, v, w in zip(*basis))
                q = q2(p)
                rows.append((q * s0, q * s1, q * s2, q3(p)))
    reduced, pivots = rref(rows)
    return 3 not in pivots


@lru_cache(maxsize=None)
def _group_matrix(g):
    cols = []
    for j in range(_NVARS):
        e = [0] * _NVARS
        e[j] = 1
        cols.append(g_apply(g, tuple(e)))
    return tuple(tuple(Fraction(cols[j][i]) for j in range(_NVARS))
                 for i in range(_NVARS))


def conic_orbit(conic: Conic):
    """Orbit of a conic under the order-144 symmetry group."""
    return sorted({conic.transform(g) for g in group_elements()},
                  key=lambda c: _sort_key(c))


def _sort_key(conic):
    return tuple(tuple(str(x) for x in row) for row in conic.rows)


def _combine(s, u, w0, w1):
    return tuple(s * a + u * b for a, b in zip(w0, w1))


def _line_zero_points(w0, w1):
    """Points of the line span(w0, w1) where q2 vanishes, with
    multiplicities, provided they are rational over Q(sqrt 3).  Returns a
    list of (point, multiplicity); an empty list means a conjugate pair
    in a larger field (never a double point)."""
    a, b, c = _restrict_q2([w0, w1])
    if not a and not b and not c:
        raise ArithmeticError("quadric vanishes on a line of the plane")
    if not a:
        if not b:
            return [(w0, 2)]  # c u^2
        if not c:
            return [(w0, 1), (w1, 1)]  # b s u
        return [(w0, 1), (_combine(-c, b, w0, w1), 1)]
    disc = b * b - 4 * a * c
    if not disc:
        return [(_combine(-b, 2 * a, w0, w1), 2)]
    root = _field_sqrt(disc)
    if root is None:
        return []
    return [(_combine(-b + root, 2 * a, w0, w1), 1),
            (_combine(-b - root, 2 * a, w0, w1), 1)]


def conic_intersection(c1: Conic, c2: Conic) -> int:
    """Intersection number of strict transforms on the resolved surface."""
    if c1 == c2:
        return -2  # smooth rational curve on a K3 surface
    stacked, _ = rref(list(c1.rows) + list(c2.rows))
    rank = len(stacked)
    if rank == 3:
        raise ArithmeticError("distinct conics cannot share a plane here")
    if rank == 6:
        return 0
    if rank == 5:
        q = nullspace(stacked)[0]
        if q2(q) != 0:
            return 0
        return 1 - (1 if _is_double_point(q) else 0)
    w0, w1 = nullspace(stacked)
    points = _line_zero_points(w0, w1)
    shared = sum(1 for p, _ in points if _is_double_point(p))
    return 2 - shared


def conic_point_intersection(conic: Conic, point) -> int:
    """Intersection of a conic with the exceptional curve over a double
    point: 1 iff the conic passes through the point."""
    return 1 if conic.contains(point) else 0


# -- the named basis --------------------------------------------------------------

SQ3 = QuadElem(0, 1)

# linear forms as coefficient rows on (x, y, z, a, b, c)
_BASIS_CONIC_FORMS = {
    1: [(1, 0, 0, 2, 0, 0), (0, -SQ3, SQ3, 0, 2, 2)],
    3: [(0, 0, 0, 1, 1, 0), (0, -1, 0, 0, 0, 1)],
    5: [(1, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, -1)],
    7: [(0, 0, 0, 1, 0, 1), (0, 0, -1, 0, 1, 0)],
    10: [(1, 0, 0, -1, 0, 0), (0, 0, 0, 0, 1, 1)],
    12: [(0, 0, 0, 1, -1, 0), (0, 1, 0, 0, 0, 1)],
    14: [(1, 0, 0, -2, 0, 0), (0, -SQ3, SQ3, 0, 2, -2)],
    15: [(0, 0, 1, 0, -2, 0), (SQ3, -SQ3, 0, -2, 0, 2)],
    16: [(1, 0, 0, -2, 0, 0), (0, SQ3, -SQ3, 0, 2, -2)],
    17: [(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0)],
    18: [(0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 0)],
    19: [(0, 0, 0, 1, 0, -1), (0, 1, 0, 0, 1, 0)],
}

_BASIS_POINTS_RAW = {
    2: (2, -1, -1, -1, 1, -1),
    4: (-1, -1, 2, 1, -1, -1),
    6: (-1, 2, -1, 1, -1, -1),
    8: (-1, 2, -1, 1, 1, 1),
    9: (-1, 2, -1, -1, 1, -1),
    11: (-1, -1, 2, -1, -1, 1),
    13: (2, -1, -1, 1, 1, 1),
}

FIBER_INDEX = 20


@lru_cache(maxsize=1)
def basis_conics():
    return {i: Conic(forms) for i, forms in _BASIS_CONIC_FORMS.items()}


@lru_cache(maxsize=1)
def basis_points():
    pts = {i: normalize_projective(p) for i, p in _BASIS_POINTS_RAW.items()}
    for p in pts.values():
        if p not in double_points():
            raise AssertionError("basis point is not a double point: %r" % (p,))
    return pts


@lru_cache(maxsize=1)
def base_conic():
    """The fixed conic x = a = 0 split off from the hyperplane class by
    the fibration; F = H - [this]."""
    return Conic([(1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)])


def _fiber_intersection_with_conic(conic: Conic) -> int:
    c0 = base_conic()
    if conic == c0:
        return 4  # F.C0 = H.C0 - C0^2 = 2 + 2
    return 2 - conic_intersection(conic, c0)


def intersection_vector(obj):
    """Pairings of a curve with the twenty basis classes.

    obj is ('conic', Conic) or ('point', normalized double point tuple).
    """
    kind, val = obj
    cs = basis_conics()
    pts = basis_points()
    vec = []
    for i in range(1, 21):
        if i in cs:
            if kind == "conic":
                vec.append(conic_intersection(val, cs[i]))
            else:
                vec.append(conic_point_intersection(cs[i], val))
        elif i in pts:
            if kind == "conic":
                vec.append(conic_point_intersection(val, pts[i]))
            else:
                vec.append(-2 if val == pts[i] else 0)
        else:  # the fiber class
            if kind == "conic":
                vec.append(_fiber_intersection_with_conic(val))
            else:
                vec.append(0)
    return vec
