import random
from fractions import Fraction

import pytest
from hypothesis import given

from bisectorc.bivariate import bipoly_eval_q, bisector_cubic
from bisectorc.constructibility import analyze
from bisectorc.errors import DegenerateTriangle
from bisectorc.geometry import (
    bisector_length_sq,
    cubic_residual,
    forward_instance,
    p_sq_from_q_t,
    p_sq_from_sides,
    q_sq_from_sides,
    reconstruct,
    recomputed_p,
)
from bisectorc.interval import Interval
from bisectorc.polynomial import QPoly, poly_eval

from conftest import rationals

EPS = Fraction(1, 10 ** 12)


def law_of_cosines_p_sq(l, b):
    # coordinates: B = (-b/2, 0), C = (b/2, 0), A = (0, h); P on AC with CP/PA = b/l
    h_sq = l * l - b * b / 4
    w = b / (b + l)         # fraction of CA from C to P
    # P = C + w (A - C) = (b/2 (1 - w), w h)
    dx = b / 2 * (1 - w) + b / 2
    return dx * dx + w * w * h_sq


def test_q_sq_examples():
    assert q_sq_from_sides(5, 8) == 9
    assert q_sq_from_sides(1, 1) == Fraction(3, 4)
    with pytest.raises(DegenerateTriangle):
        q_sq_from_sides(1, 2)


def test_p_sq_examples():
    assert p_sq_from_sides(5, 8) == Fraction(5760, 169)
    assert bisector_length_sq(Fraction(5), Fraction(8), Fraction(5)) == Fraction(5760, 169)
    assert law_of_cosines_p_sq(Fraction(5), Fraction(8)) == Fraction(5760, 169)
    assert p_sq_from_sides(1, 1) == Fraction(3, 4)
    with pytest.raises(DegenerateTriangle):
        p_sq_from_sides(1, 2)


def test_p_sq_from_q_t_examples():
    assert p_sq_from_q_t(1, 1) == 1
    assert p_sq_from_q_t(3, Fraction(5, 8)) == Fraction(5760, 169)
    assert p_sq_from_q_t(Fraction(11, 28), Fraction(4, 7)) == 1
    with pytest.raises(DegenerateTriangle):
        p_sq_from_q_t(1, Fraction(1, 2))


def test_cubic_residual_examples():
    assert cubic_residual(5, 8, Fraction(5760, 169), 9) == 0
    assert cubic_residual(1, 1, Fraction(3, 4), Fraction(3, 4)) == 0
    assert cubic_residual(1, 1, 1, Fraction(3, 4)) == 1


@pytest.mark.parametrize("l, b, q_sq, p_sq, cos_theta, cp_x", [
    (5, 8, 9, Fraction(5760, 169), Fraction(4, 5), Fraction(40, 13)),
    (1, 1, Fraction(3, 4), Fraction(3, 4), Fraction(1, 2), Fraction(1, 2)),
    (3, 4, 5, Fraction(480, 49), Fraction(2, 3), Fraction(12, 7)),
])
def test_forward_instance(l, b, q_sq, p_sq, cos_theta, cp_x):
    inst = forward_instance(l, b)
    assert (inst.q_sq, inst.p_sq, inst.cos_theta, inst.cp_x) == (q_sq, p_sq, cos_theta, cp_x)
    assert cubic_residual(inst.l, inst.b, inst.p_sq, inst.q_sq) == 0
    assert 0 < inst.cos_theta < 1 and 0 < inst.cp_x < inst.l


def test_forward_identity_1000():
    rng = random.Random(1)
    for _ in range(1000):
        l = Fraction(rng.randint(1, 10 ** 4), rng.randint(1, 10 ** 4))
        b = l * Fraction(rng.randint(1, 1999), 1000)
        assert cubic_residual(l, b, p_sq_from_sides(l, b), q_sq_from_sides(l, b)) == 0


@given(rationals(Fraction(1, 100), 100, 100), rationals(Fraction(1, 1000), Fraction(1999, 1000), 1000))
def test_three_bisector_formulas_agree(l, ratio):
    b = l * ratio
    closed = p_sq_from_sides(l, b)
    assert closed == bisector_length_sq(l, b, l) == law_of_cosines_p_sq(l, b)


@given(rationals(Fraction(1, 100), 100, 100), rationals(Fraction(501, 1000), 100, 1000))
def test_root_equivalence(qv, t):
    root = poly_eval(bipoly_eval_q(bisector_cubic(), qv), t) == 0
    assert (p_sq_from_q_t(qv, t) == 1) == root


def test_family_factorization_lemma():
    t = QPoly.x()
    assert 2 * t ** 3 + 3 * t ** 2 - 1 == (t + 1) ** 2 * (2 * t - 1)


@given(rationals(Fraction(1, 50), 50, 50), rationals(Fraction(1, 100), Fraction(199, 100), 100),
       rationals(Fraction(1, 50), 50, 50))
def test_forward_scaling(l, ratio, s):
    a = forward_instance(l, l * ratio)
    c = forward_instance(s * l, s * l * ratio)
    assert c.q_sq == s * s * a.q_sq and c.p_sq == s * s * a.p_sq


@pytest.mark.parametrize("qv", [1, Fraction(1, 2), 2, 3])
def test_reconstruct_closes_loop(qv):
    v = analyze(qv)
    inst = reconstruct(qv, v.root_box, EPS)
    assert inst.l.width <= EPS and inst.b.width <= EPS
    p = recomputed_p(inst)
    assert 1 - Fraction(1, 10 ** 10) <= p.lo and p.hi <= 1 + Fraction(1, 10 ** 10)
    # q from the enclosures agrees too
    q_enc = Interval.coerce(inst.q_sq)
    assert q_enc.lo - EPS <= qv * qv <= q_enc.hi + EPS


def test_reconstruct_values():
    inst = reconstruct(1, analyze(1).root_box, EPS)
    # 2/sqrt(3) = 1.1547005383792515...
    assert inst.b.lo <= Fraction(11547005383792, 10 ** 13) + Fraction(1, 10 ** 12)
    assert abs(inst.b.mid - inst.l.mid) <= EPS
    assert abs(float(inst.b.mid) - 2 / 3 ** 0.5) < 1e-12
    inst2 = reconstruct(2, analyze(2).root_box, EPS)
    assert abs(float(inst2.b.mid) - 0.9270763314610) < 1e-11
    assert abs(float(inst2.l.mid) - 2.0530142793193) < 1e-11


def test_interval_sqrt_encloses():
    for x in (Fraction(2), Fraction(1, 3), Fraction(10 ** 20 + 7, 3)):
        r = Interval.point(x).sqrt(80)
        assert r.lo * r.lo <= x <= r.hi * r.hi
        assert r.width <= Fraction(1, 2 ** 79)
