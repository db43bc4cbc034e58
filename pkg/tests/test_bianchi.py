import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from farey_neighbours import bianchi as bz
from farey_neighbours.moebius import MoebiusMatrix
from farey_neighbours.quadratic import QuadField, class_group, ideal_product, is_principal, same_class

F5 = QuadField(-5)
F6 = QuadField(-6)
R5 = F5.sqrt_f
R6 = F6.sqrt_f


def P(F, v):
    return bz.ProjectivePoint.of(F, v)


def test_farey_examples():
    inf = bz.ProjectivePoint.infinity(F5)
    alpha = P(F5, (F5.one + R5) / 2)
    beta = P(F5, 2 / (F5.one - R5))
    assert bz.is_k_farey(inf, P(F5, 0))
    assert bz.is_k_farey(alpha, beta)
    assert not bz.is_k_farey(inf, P(F5, R5 / 2))
    # the minus-sign variant is not tangent
    assert not bz.is_k_farey(alpha, P(F5, -2 / (F5.one - R5)))


def test_canonical_horoballs():
    alpha = P(F5, (F5.one + R5) / 2)
    B_inf = bz.canonical_horoball(bz.ProjectivePoint.infinity(F5))
    assert bz.canonical_horoball(P(F5, 0)).diameter == 1
    assert B_inf.is_infinite and B_inf.diameter == 1
    assert bz.canonical_horoball(alpha).diameter == Fraction(1, 2)
    assert bz.horoballs_tangent(B_inf, bz.canonical_horoball(P(F5, 0)))
    assert not bz.horoballs_tangent(B_inf, bz.canonical_horoball(alpha))
    beta = P(F5, 2 / (F5.one - R5))
    assert bz.horoballs_tangent(bz.canonical_horoball(alpha), bz.canonical_horoball(beta))


def test_overlap_raises():
    fake = bz.HoroballSpec(P(F5, 0), Fraction(2))
    with pytest.raises(bz.OverlapError):
        bz.horoballs_tangent(bz.canonical_horoball(bz.ProjectivePoint.infinity(F5)), fake)


def _random_point(F, rng):
    while True:
        a = F(rng.randint(-6, 6), rng.randint(-6, 6))
        b = F(rng.randint(-6, 6), rng.randint(-6, 6))
        if a or b:
            return bz.ProjectivePoint(a, b)


@pytest.mark.parametrize("f", [-1, -2, -3, -5, -6, -7, -11, -15])
def test_ideal_test_equals_tangency(f):
    F = QuadField(f)
    rng = random.Random(f)
    for _ in range(300):
        x, y = _random_point(F, rng), _random_point(F, rng)
        if x == y:
            continue
        hx, hy = bz.canonical_horoball(x), bz.canonical_horoball(y)
        farey = bz.is_k_farey(x, y)
        assert farey == bz.horoballs_tangent(hx, hy)
        if farey:
            assert is_principal(ideal_product(x.ideal, y.ideal.conj())) is not None or \
                same_class(x.ideal, y.ideal)
        lam = F(rng.randint(1, 4), rng.randint(-3, 3))
        assert bz.is_k_farey(bz.ProjectivePoint(lam * x.a, lam * x.b), y) == farey


@pytest.mark.parametrize("f", [-1, -2, -3, -7, -11])
def test_tangent_to_infinity_exactly_at_integers(f):
    F = QuadField(f)
    inf = bz.ProjectivePoint.infinity(F)
    for b in [F(2), F(1, 1), F(3, -1)]:
        for ax in range(-3, 4):
            for ay in range(-3, 4):
                x = bz.ProjectivePoint(F(ax, ay), b)
                assert bz.is_k_farey(inf, x) == x.value().is_integral()


@pytest.mark.parametrize("f", [-1, -2, -3, -5, -7, -23])
def test_bezout_complete(f):
    F = QuadField(f)
    rng = random.Random(1)
    done = 0
    while done < 40:
        p, q = F(rng.randint(-9, 9), rng.randint(-9, 9)), F(rng.randint(-9, 9), rng.randint(-9, 9))
        if not (p or q) or bz.ideal_from_generators(p, q).norm != 1:
            continue
        M = bz.bezout_complete(p, q)
        assert (M.a, M.c) == (p, q) and M.det() == F.one
        assert all(e.is_integral() for e in M.entries())
        done += 1


def test_stabiliser_orders():
    F1 = QuadField(-1)
    assert bz.pointwise_stabilizer_order(P(F1, 0), bz.ProjectivePoint.infinity(F1)) == 2
    assert bz.pointwise_stabilizer_order(P(F1, Fraction(1, 3)), bz.ProjectivePoint.infinity(F1)) == 1
    w = bz.example_family(F6, "ex1", p0=3)
    assert bz.pointwise_stabilizer_order(w.alpha, w.beta) == 1
    assert bz.pointwise_stabilizer_order(P(F1, 1), P(F1, -1)) == 2


def test_involution_search():
    F1 = QuadField(-1)
    E = bz.find_exchanging_involution(P(F1, 0), bz.ProjectivePoint.infinity(F1))
    assert E.projectively_equal(MoebiusMatrix(F1.zero, -F1.one, F1.one, F1.zero))
    alpha, beta = P(F5, (F5.one + R5) / 2), P(F5, 2 / (F5.one - R5))
    E = bz.find_exchanging_involution(alpha, beta)
    assert E.projectively_equal(MoebiusMatrix(F5(-2), R5, R5, F5(2)))
    status, E = bz.search_exchanging_involution(bz.ProjectivePoint.infinity(F5), P(F5, (F5.one + R5) / 3))
    assert status == bz.OBSTRUCTED and E is None


def _check_witness(w):
    # integral C: det C generates I(alpha) I(beta); otherwise C lies in SL2(K)
    if all(z.is_integral() for z in w.C.entries()):
        assert bz.ideal_from_generators(w.C.det()) == ideal_product(w.alpha.ideal, w.beta.ideal)
    else:
        assert w.C.det() == w.field.one
    assert bz.act(w.C, bz.ProjectivePoint.infinity(w.field)) == w.alpha
    assert bz.act(w.C, P(w.field, 0)) == w.beta
    assert bz.is_k_farey(w.alpha, w.beta)
    if w.E is not None:
        E = w.E
        assert E.det() == w.field.one and (E * E).is_scalar()
        assert bz.act(E, w.alpha) == w.beta and bz.act(E, w.beta) == w.alpha
        assert w.iota == 1


def test_construction_examples():
    cls = bz.class_points(F5)
    w = bz.construct_k_farey(cls[1])
    assert w.p0 == 3
    assert (w.alpha, w.beta) == (P(F5, (F5.one + R5) / 3), P(F5, (F5.one + R5) / 4))
    _check_witness(w)
    w6 = bz.construct_k_farey(bz.class_points(F6)[1])
    assert w6.p0 == 3 and (w6.alpha, w6.beta) == (P(F6, R6 / 3), P(F6, R6 / 4))
    w0 = bz.construct_k_farey(cls[0])
    assert w0.alpha.is_infinite and w0.beta == P(F5, 0)


@pytest.mark.parametrize("f", [-1, -2, -5, -6, -10, -14, -15, -23, -26, -30, -39, -47, -71, -89, -97])
def test_construction_every_class(f):
    F = QuadField(f)
    pts = bz.class_points(F)
    assert len(pts) == class_group(F)[0]
    for x in pts:
        w = bz.construct_k_farey(x, search_bound=0)
        assert same_class(w.alpha.ideal, x.ideal)
        _check_witness(w)


def test_example_families():
    w1 = bz.example_family(F6, "ex1", p0=3)
    assert w1.alpha == P(F6, R6 / 3) and w1.beta == P(F6, F6(-3) / (2 * R6))
    assert w1.E.projectively_equal(MoebiusMatrix(R6, F6.one, F6(5), -R6))
    w2 = bz.example_family(F5, "ex2")
    assert w2.E.projectively_equal(MoebiusMatrix(F5(-2), R5, R5, F5(2)))
    w3 = bz.example_family(F6, "ex3")
    assert w3.alpha == P(F6, R6 / 2) and w3.beta == P(F6, F6(-2) / R6)
    for w in (w1, w2, w3):
        _check_witness(w)
        E = bz.find_exchanging_involution(w.alpha, w.beta)
        assert E is not None and bz.act(E, w.alpha) == w.beta


def test_counts_small():
    F1 = QuadField(-1)
    assert bz.count_k_farey_pairs(F1, epsilon=1) == 2
    assert bz.count_k_farey_pairs(F1, eps_sq=Fraction(1, 2)) > 2


@pytest.mark.parametrize("f", [-1, -2, -3, -7, -5])
def test_fast_and_general_counts_agree(f):
    F = QuadField(f)
    thr = Fraction(1, 16)
    fast = bz.count_k_farey_pairs(F, eps_sq=thr)
    inf, zero = bz.ProjectivePoint.infinity(F), P(F, 0)
    # the general path, entered with the pair (0, 1) from the same orbit
    general = len(bz.orbit_pair_classes(zero, P(F, 1), thr))
    assert fast == general


@given(st.integers(1, 40))
def test_counts_monotone(k):
    F = QuadField(-2)
    a = bz.count_k_farey_pairs(F, eps_sq=Fraction(1, k))
    b = bz.count_k_farey_pairs(F, eps_sq=Fraction(1, k + 1))
    assert a <= b


def test_witness_json_round_trip():
    import json
    d = bz.example_family(F5, "ex2").to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["E"] == [[["-2", "0"], ["0", "1"]], [["0", "1"], ["2", "0"]]]
