"""Heights, local contributions, torsion, and the saturation argument."""

from fractions import Fraction

import pytest

from zerodiag.exactnum import Polynomial, QuadElem, RationalFunction
from zerodiag.curve import (
    WeierstrassModel,
    family_model,
    fiber_at,
    named_sections,
    param_to_point,
)
from zerodiag.mwlat import (
    Certificate,
    ComponentRef,
    Series,
    height_gram,
    height_pairing,
    intersection_with_zero,
    is_square_in_function_field,
    local_contribution,
    mutual_intersection,
    rank_formula_certificate,
    saturation_certificate,
    section_component,
    torsion_certificate,
    torsion_points,
    _family_fibers,
    _series_of_rf,
)

T = Polynomial.gen()


@pytest.fixture(scope="module")
def model():
    return family_model()


@pytest.fixture(scope="module")
def pts(model):
    secs = named_sections()
    out = {k: param_to_point(secs[k], model) for k in ("P", "Q", "T1", "T2")}
    out["O"] = model.infinity()
    return out


# -- series helpers ------------------------------------------------------------


def test_series_arithmetic():
    a = Series([1, 2, 3], 5)
    b = Series([0, 1], 5)
    assert (a * b).coeffs == [0, 1, 2, 3, 0]
    assert (a + b).coeffs == [1, 3, 3, 0, 0]
    assert (a - a).is_zero()
    assert b.ord() == 1
    assert Series([0, 0, 0], 3).ord() == 3


def test_series_inverse_roundtrip():
    a = Series([2, -1, 5, Fraction(1, 3)], 6)
    prod = a * a.inverse()
    assert prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])
    with pytest.raises(ZeroDivisionError):
        Series([0, 1], 3).inverse()


def test_series_sqrt():
    a = Series([9, 6, 1], 6)  # (3 + t)^2
    r = a.sqrt(Fraction(3))
    assert r.coeffs[:2] == [3, 1]
    assert (r * r - a).is_zero()
    neg = a.sqrt(Fraction(-3))
    assert neg.coeffs[0] == -3
    assert (neg * neg - a).is_zero()


def test_series_sqrt_quadratic_field():
    # constant term 48 has root 4*sqrt(3)
    a = Series([QuadElem(48), QuadElem(24), QuadElem(3)], 5)
    r = a.sqrt(QuadElem(0, 4))
    assert (r * r - a).is_zero()


def test_series_shift_down():
    a = Series([0, 0, 7, 1], 4)
    assert a.shift_down(2).coeffs == [7, 1, 0, 0]
    with pytest.raises(ValueError):
        a.shift_down(3)


def test_series_expansion_matches_taylor():
    # 1/(1 - t) at 0 is the geometric series
    rf = RationalFunction(1, 1 - T)
    s = _series_of_rf(rf, Fraction(0), 6)
    assert s.coeffs == [1] * 6
    # (t^2 + 1)/(t + 2) at t = 1: shift and compare against direct division
    rf = RationalFunction(T * T + 1, T + 2)
    s = _series_of_rf(rf, Fraction(1), 4)
    val = Fraction(2, 3)
    assert s.at_zero() == val
    # derivative: (2t(t+2) - (t^2+1)) / (t+2)^2 at 1 = (6 - 2)/9
    assert s.coeffs[1] == Fraction(4, 9)


# -- intersection with the zero section ------------------------------------------


def test_zero_section_intersections(pts):
    assert intersection_with_zero(pts["P"]) == 0
    assert intersection_with_zero(pts["Q"]) == 0
    assert intersection_with_zero(pts["T1"]) == 0
    assert intersection_with_zero(pts["T2"]) == 0
    assert intersection_with_zero(2 * pts["P"]) == 1


def test_mutual_intersection(pts):
    assert mutual_intersection(pts["P"], pts["Q"]) == 0
    assert mutual_intersection(pts["P"], pts["T1"]) == 0
    with pytest.raises(ValueError):
        mutual_intersection(pts["P"], pts["P"])


# -- fiber components -------------------------------------------------------------


def test_component_table(pts):
    """Which component each named section hits, at every bad place."""
    expected = {
        # place: (P, Q, T1, T2) as (kind, index)
        Fraction(-2): [("identity", None), ("cycle", 3), ("cycle", 2), ("cycle", 2)],
        Fraction(-1): [("far", -2), ("far", -2), ("far", -2), ("far", 0)],
        Fraction(0): [("cycle", 1), ("cycle", 1), ("identity", None), ("cycle", 1)],
        Fraction(1): [("identity", None), ("identity", None), ("far", 18), ("far", 0)],
        Fraction(2): [("cycle", 2), ("cycle", 1), ("cycle", 2), ("identity", None)],
        "inf": [("identity", None), ("cycle", 1), ("identity", None), ("cycle", 1)],
    }
    for fib in _family_fibers():
        want = expected[fib.place]
        for pt, (kind, index) in zip((pts["P"], pts["Q"], pts["T1"], pts["T2"]), want):
            ref = section_component(pt, fib)
            assert (ref.kind, ref.index) == (kind, index), (fib.place, pt)


def test_zero_section_on_identity(pts):
    for fib in _family_fibers():
        ref = section_component(pts["O"], fib)
        assert ref.kind == "identity"


def test_contribution_values():
    fibers = {f.place: f for f in _family_fibers()}
    i4 = fibers[Fraction(2)]
    mid = ComponentRef(2, "I4", "cycle", 2)
    side = ComponentRef(2, "I4", "cycle", 1)
    idy = ComponentRef(2, "I4", "identity", None)
    assert local_contribution(i4, mid) == 1
    assert local_contribution(i4, side) == Fraction(3, 4)
    assert local_contribution(i4, side, mid) == Fraction(1, 2)
    assert local_contribution(i4, side, ComponentRef(2, "I4", "cycle", 3)) == Fraction(1, 4)
    assert local_contribution(i4, idy, mid) == 0
    star = fibers[Fraction(1)]
    a = ComponentRef(1, "I0*", "far", 0)
    b = ComponentRef(1, "I0*", "far", 18)
    assert local_contribution(star, a) == 1
    assert local_contribution(star, a, b) == Fraction(1, 2)
    assert local_contribution(star, a, a) == 1


def test_unsupported_fiber_type_is_loud():
    # I2* fiber: component identification is deliberately not implemented
    t = RationalFunction(T)
    model = WeierstrassModel(-(t + 2 * t * t), 2 * t ** 3, 0)
    fib = fiber_at(model, Fraction(0))
    assert fib.symbol == "I2*"
    sec = model.point(0, 0)
    with pytest.raises(NotImplementedError):
        section_component(sec, fib)


# -- heights ----------------------------------------------------------------------


def test_height_values(pts):
    assert height_pairing(pts["P"]) == Fraction(3, 2)
    assert height_pairing(pts["Q"]) == Fraction(1, 2)
    assert height_pairing(pts["P"], pts["Q"]) == 0
    assert height_pairing(pts["T1"]) == 0
    assert height_pairing(pts["T2"]) == 0
    assert height_pairing(pts["O"]) == 0
    assert height_pairing(pts["O"], pts["P"]) == 0


def test_height_gram(pts):
    gram = height_gram([pts["P"], pts["Q"]])
    assert gram == [[Fraction(3, 2), 0], [0, Fraction(1, 2)]]


def test_height_of_multiples(pts):
    p = pts["P"]
    assert height_pairing(2 * p) == 6
    assert height_pairing(2 * p, p) == 3
    assert height_pairing(2 * p, pts["Q"]) == 0


def test_polarization_identity(pts):
    p, q = pts["P"], pts["Q"]
    assert height_pairing(p + q) == (height_pairing(p)
                                     + 2 * height_pairing(p, q)
                                     + height_pairing(q))
    assert height_pairing(p - q) == (height_pairing(p)
                                     - 2 * height_pairing(p, q)
                                     + height_pairing(q))


def test_height_invariant_under_torsion_translation(pts):
    p, q = pts["P"], pts["Q"]
    for t in torsion_points().values():
        assert height_pairing(p + t) == height_pairing(p)
        assert height_pairing(p + t, q) == height_pairing(p, q)


def test_height_negation_antisymmetry(pts):
    q = pts["Q"]
    assert height_pairing(q.conjugate()) == height_pairing(q)  # conj(Q) = -Q
    assert height_pairing(pts["P"], -q) == -height_pairing(pts["P"], q)
    assert height_pairing(q, -q) == -Fraction(1, 2)


# -- torsion and descent ------------------------------------------------------------


def test_torsion_points(model):
    tors = torsion_points()
    assert len(tors) == 4
    for name, p in tors.items():
        assert (2 * p).is_infinity
    vals = list(tors.values())
    for a in vals:
        for b in vals:
            assert (a + b) in vals


def test_torsion_certificate():
    cert = torsion_certificate()
    assert cert.ok
    assert cert.fact("torsion.order") == 4
    assert cert.imported  # relies on the imported torsion bound


def test_square_classes(pts):
    p, q = pts["P"], pts["Q"]
    # positive control: u of a doubled point is a square times (u - e1), e1 = 0
    assert is_square_in_function_field((2 * p).u)
    # u(T1) = (t^2 - 1)(t + 2)^2 is not a square
    assert not is_square_in_function_field(pts["T1"].u)
    base = p + q
    for t in torsion_points().values():
        assert not is_square_in_function_field((base + t).u)


def test_saturation_certificate():
    cert = saturation_certificate()
    assert cert.ok
    assert cert.fact("lattice.scaled_gram") == ((6, 0), (0, 2))
    assert cert.fact("lattice.scaled_disc") == 12
    assert cert.fact("lattice.index") == 1
    assert cert.fact("lattice.rank") == 2


def test_rank_formula_certificate():
    cert = rank_formula_certificate()
    assert cert.ok
    assert cert.fact("picard.number") == 20
    assert cert.fact("euler.number") == 24
    assert cert.fact("fibers.component_excess") == 16


def test_certificate_is_immutable():
    cert = rank_formula_certificate()
    with pytest.raises(AttributeError):
        cert.ok = False
    with pytest.raises(KeyError):
        cert.fact("no.such.key")
