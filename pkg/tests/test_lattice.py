import random
from fractions import Fraction as F

import pytest

from zerodiag.lattice import (
    DiscriminantGroup,
    char_poly,
    det,
    gram_pairing,
    is_positive_definite,
    kummer_condition,
    mat_inverse,
    mat_vec,
    reduced_binary_even_forms,
    short_vectors,
    signature,
    smith_normal_form,
    vectors_with_norm,
)

E8 = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]


def random_int_matrix(rng, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def cofactor_det(mat):
    # textbook Laplace expansion, the slow oracle
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * cofactor_det(minor)
    return total


def test_det_against_cofactor_oracle():
    rng = random.Random(5)
    for n in (1, 2, 3, 4, 5):
        for _ in range(4):
            m = random_int_matrix(rng, n)
            assert det(m) == cofactor_det(m)


def test_det_fraction_entries():
    m = [[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]]
    assert det(m) == F(1, 14) - F(1, 15)


def test_mat_inverse_roundtrip():
    rng = random.Random(9)
    while True:
        m = random_int_matrix(rng, 4)
        if det(m) != 0:
            break
    inv = mat_inverse(m)
    for i in range(4):
        e = mat_vec(inv, mat_vec(m, [int(k == i) for k in range(4)]))
        assert e == [F(int(k == i)) for k in range(4)]


def test_smith_normal_form_divisibility_and_det():
    rng = random.Random(13)
    for _ in range(10):
        m = random_int_matrix(rng, 4)
        if det(m) == 0:
            continue
        d, uinv = smith_normal_form(m)
        assert len(d) == 4
        for a, b in zip(d, d[1:]):
            assert b % a == 0
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(det(m))
        assert abs(det(uinv)) == 1


def test_discriminant_group_hyperbolic_plane():
    # unimodular, so the group is trivial
    dg = DiscriminantGroup([[0, 1], [1, 0]])
    assert dg.orders == ()
    assert dg.order() == 1


def test_discriminant_group_orders_and_q():
    dg = DiscriminantGroup([[2, 0], [0, 24]])
    assert dg.orders == (2, 24)
    assert dg.q_values == (F(1, 2), F(1, 24))
    # generator norms recompute from the stored generators
    for w, q in zip(dg.generators, dg.q_values):
        raw = gram_pairing(dg.gram, list(w), list(w))
        assert (raw - q) % 2 == 0


def test_discriminant_group_rejects_odd_lattice():
    with pytest.raises(ValueError):
        DiscriminantGroup([[1, 0], [0, 2]])


def test_discriminant_group_negative_definite_rank_one():
    dg = DiscriminantGroup([[-24]])
    assert dg.orders == (24,)
    # q(generator) = -1/24 mod 2Z, canonical representative in [0, 2)
    assert dg.q_values == (F(47, 24),)


def test_char_poly_companion_matrix():
    # companion of x^3 - 2x - 5
    m = [[0, 0, 5], [1, 0, 2], [0, 1, 0]]
    assert char_poly(m) == [F(-5), F(-2), F(0), F(1)]


def test_signature():
    assert signature(E8) == (8, 0, 0)
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[2, 0, 0], [0, -2, 0], [0, 0, 0]]) == (1, 1, 1)
    assert is_positive_definite(E8)
    assert not is_positive_definite([[0, 1], [1, 0]])


def test_reduced_forms_determinants():
    assert reduced_binary_even_forms(3) == [((2, 1), (1, 2))]
    assert reduced_binary_even_forms(4) == [((2, 0), (0, 2))]
    forms48 = reduced_binary_even_forms(48)
    assert forms48 == [
        ((2, 0), (0, 24)),
        ((4, 0), (0, 12)),
        ((6, 0), (0, 8)),
        ((8, 4), (4, 8)),
    ]
    for (a, b), (_, c) in forms48:
        assert a * c - b * b == 48


def test_reduced_forms_exhaustive_against_scan():
    # brute scan over a generous box must find no extra classes
    for d in (3, 4, 12, 48, 75):
        expected = set(reduced_binary_even_forms(d))
        scanned = set()
        for a in range(2, 4 * d, 2):
            for b in range(0, a // 2 + 1):
                for c in range(a, 4 * d + 1, 2):
                    if a * c - b * b == d and 2 * b <= a <= c:
                        scanned.add(((a, b), (b, c)))
        assert scanned == expected


def test_kummer_condition():
    assert kummer_condition(((4, 0), (0, 12)))
    assert kummer_condition(((8, 4), (4, 8)))
    assert not kummer_condition(((2, 0), (0, 24)))
    assert not kummer_condition(((6, 0), (0, 8)))


def naive_vectors(gram, bound, box):
    n = len(gram)
    out = []

    def rec(i, v):
        if i == n:
            q = gram_pairing(gram, v, v)
            if q <= bound:
                lead = next((x for x in v if x), None)
                if lead is not None and lead > 0:
                    out.append(tuple(v))
            return
        for x in range(-box, box + 1):
            rec(i + 1, v + [x])

    rec(0, [])
    return sorted(out)


def test_short_vectors_E8_root_count():
    roots = short_vectors(E8, 2)
    assert len(roots) == 120  # 240 roots, one per +/- pair
    assert all(gram_pairing(E8, list(v), list(v)) == 2 for v in roots)


def test_short_vectors_against_box_scan():
    gram = [[2, 1, 0], [1, 4, -1], [0, -1, 6]]
    got = short_vectors(gram, 12)
    assert got == naive_vectors(gram, 12, box=4)


def test_short_vectors_with_center():
    gram = [[2, 0], [0, 2]]
    sols = vectors_with_norm(gram, F(1, 2), center=[F(1, 2), F(0)])
    assert sols == [(-1, 0), (0, 0)]
    # shifted enumeration returns all solutions, not half
    sols2 = vectors_with_norm(gram, F(5, 2), center=[F(1, 2), F(0)])
    assert set(sols2) == {(-1, 1), (-1, -1), (0, 1), (0, -1)}
    sols3 = vectors_with_norm(gram, F(9, 2), center=[F(1, 2), F(0)])
    assert set(sols3) == {(-2, 0), (1, 0)}


def test_short_vectors_rejects_indefinite():
    with pytest.raises(ValueError):
        short_vectors([[0, 1], [1, 0]], 2)
