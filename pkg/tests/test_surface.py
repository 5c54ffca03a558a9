import random
from fractions import Fraction as F

import pytest

from zerodiag.exactnum import Polynomial, rational_roots
from zerodiag.surface import (
    Parametrization,
    char_poly,
    char_poly_coeffs,
    equation_values,
    g_apply,
    g_compose,
    group_elements,
    integer_trivial_locus,
    integral_eigenvalues,
    is_singular_point,
    is_trivial,
    jacobian,
    low_degree_parametrization,
    matrix_of_triple,
    matrix_rank,
    normalize_projective,
    on_surface,
    partition_orbits,
    point_orbit,
    search,
    singular_points,
    trivial_locus,
)

T = Polynomial.gen()


def eigenvalues_by_root_finding(a, b, c):
    # oracle: factor the characteristic cubic over Q directly
    roots = sorted(rational_roots(char_poly(a, b, c)), reverse=True)
    if len(roots) == 0 or any(r.denominator != 1 for r in roots):
        return None
    p, q = char_poly_coeffs(a, b, c)
    full = []
    for r in roots:
        f = char_poly(a, b, c)
        full.extend([int(r)] * f.valuation_at(r))
    if len(full) != 3:
        return None
    return tuple(sorted(full, reverse=True))


def test_char_poly_matches_matrix():
    # coefficients agree with trace identities of the actual matrix
    a, b, c = 26, 51, 114
    m = matrix_of_triple(a, b, c)
    tr2 = sum(sum(m[i][k] * m[k][i] for k in range(3)) for i in range(3))
    p, q = char_poly_coeffs(a, b, c)
    assert tr2 == 2 * p
    detm = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    assert detm == q


def test_integral_eigenvalues_known_triples():
    assert integral_eigenvalues(26, 51, 114) == (136, -19, -117)
    assert integral_eigenvalues(57, 99, 125) == (190, -55, -135)
    assert integral_eigenvalues(1, 1, 1) == (2, -1, -1)
    assert integral_eigenvalues(1, 2, 3) is None


def test_integral_eigenvalues_against_oracle():
    rng = random.Random(31)
    for _ in range(300):
        a = rng.randint(1, 40)
        b = rng.randint(1, 40)
        c = rng.randint(1, 40)
        assert integral_eigenvalues(a, b, c) == eigenvalues_by_root_finding(a, b, c)


def test_integral_eigenvalues_sum_and_products():
    ev = integral_eigenvalues(26, 51, 114)
    x, y, z = ev
    p, q = char_poly_coeffs(26, 51, 114)
    assert x + y + z == 0
    assert x * y + y * z + z * x == -p
    assert x * y * z == q


def test_search_small_limit_brute_force():
    # oracle: triviality-unaware full scan with the root-finding oracle
    limit = 30
    expected = []
    for a in range(1, limit + 1):
        for b in range(a, limit + 1):
            for c in range(b, limit + 1):
                if is_trivial(a, b, c):
                    continue
                ev = eigenvalues_by_root_finding(a, b, c)
                if ev is not None:
                    expected.append(((a, b, c), ev))
    expected.sort(key=lambda item: (item[0][2], item[0][0], item[0][1]))
    assert search(limit) == expected


def test_search_finds_the_lowest_triple():
    # the smallest nontrivial triple by largest entry is (26, 51, 114)
    assert search(113) == []
    hits = search(114)
    assert hits == [((26, 51, 114), (136, -19, -117))]
    assert all(not is_trivial(*t) for t, _ in hits)


def test_search_to_125():
    hits = search(125)
    assert hits == [
        ((26, 51, 114), (136, -19, -117)),
        ((57, 99, 125), (190, -55, -135)),
    ]


def test_search_workers_agree():
    assert search(45, workers=2) == search(45)


def test_surface_membership():
    assert on_surface((2, -1, -1, 1, 1, 1))
    assert on_surface((190, -55, -135, 125, 99, 57))
    assert not on_surface((1, 1, -2, 1, 1, 1))


def test_singular_points_are_the_twelve_nodes():
    pts = singular_points()
    assert len(pts) == 12
    assert len(set(pts)) == 12
    for p in pts:
        assert on_surface(p)
        assert is_singular_point(p)
        assert matrix_rank(jacobian(p)) == 2
    # and a smooth point is smooth
    assert not is_singular_point((190, -55, -135, 125, 99, 57))


def test_singular_points_form_one_orbit():
    pts = singular_points()
    orb = point_orbit(pts[0])
    assert orb == {normalize_projective(p) for p in pts}


def test_group_order_and_closure():
    G = group_elements()
    assert len(G) == 144
    assert len(set(G)) == 144
    rng = random.Random(8)
    pt = (6, -1, -5, 2, 3, 1)
    for _ in range(30):
        g, h = rng.choice(G), rng.choice(G)
        gh = g_compose(g, h)
        assert gh in G
        assert g_apply(gh, pt) == g_apply(g, g_apply(h, pt))


def test_group_preserves_surface():
    pt = (190, -55, -135, 125, 99, 57)
    for g in group_elements():
        assert on_surface(g_apply(g, pt))


def test_normalize_projective():
    assert normalize_projective((-56, -16, 72, 56, 24, 24)) == (-7, -2, 9, 7, 3, 3)
    assert normalize_projective((F(1, 2), F(0), F(-1, 3))) == (-3, 0, 2)
    with pytest.raises(ValueError):
        normalize_projective((0, 0, 0))


def test_partition_orbits():
    pts = singular_points() + [(190, -55, -135, 125, 99, 57)]
    orbits = partition_orbits(pts)
    assert sorted(len(o) for o in orbits) == [1, 12]


def test_low_degree_parametrization():
    par = low_degree_parametrization()
    assert par.verify()
    assert par.degree() == 4
    assert par.triple(F(3)) == (125, 99, 57)
    assert par.evaluate_projective(F(3)) == (190, -55, -135, 125, 99, 57)
    assert par.evaluate_projective(F(0)) == (-7, -2, 9, 7, 3, 3)


def test_parametrization_verify_rejects_bad():
    t = T
    # constants on the surface: nonconstant requirement fails
    assert not Parametrization(2, -1, -1, 1, 1, 1).verify()
    # common factor t
    par = low_degree_parametrization()
    scaled = Parametrization(*(p * t for p in par.components()))
    assert not scaled.verify()
    # violates the equations
    assert not Parametrization(t, t, -2 * t, 1, 1, 1).verify()


def test_parametrization_group_action_keeps_validity():
    par = low_degree_parametrization()
    rng = random.Random(4)
    G = group_elements()
    for _ in range(10):
        g = rng.choice(G)
        assert par.apply(g).verify()


def test_trivial_locus_full_rational_set():
    par = low_degree_parametrization()
    locus = trivial_locus(par)
    assert locus == {F(-2), F(-1), F(0), F(4, 7), F(1), F(6, 5),
                     F(7, 4), F(2), F(8, 3), F(4), F(10)}
    # each claimed root really is trivial, and neighbours are not
    for r in locus:
        a, b, c = par.triple(r)
        assert is_trivial(a, b, c)
    for t0 in (F(3), F(5), F(-3), F(1, 2)):
        a, b, c = par.triple(t0)
        assert not is_trivial(a, b, c)


def test_integer_trivial_locus():
    par = low_degree_parametrization()
    assert integer_trivial_locus(par) == [-2, -1, 0, 1, 2, 4, 10]


def test_parametrized_triples_have_integral_spectrum():
    par = low_degree_parametrization()
    for t0 in range(-6, 12):
        vals = par.evaluate(F(t0))
        x, y, z, a, b, c = [int(v) for v in vals]
        spec = sorted((x, y, z), reverse=True)
        got = integral_eigenvalues(abs(a), abs(b), abs(c))
        assert got is not None
        assert list(got) == spec or list(got) == sorted((-x, -y, -z), reverse=True)


def test_equation_values_on_polynomials():
    par = low_degree_parametrization()
    f1, f2, f3 = equation_values(par.components())
    assert f1.is_zero and f2.is_zero and f3.is_zero
