"""The family construction and its mechanical verification."""
import random
from fractions import Fraction

import pytest

from iterroot.construction import (
    AnchorError,
    Anchors,
    ConstructionError,
    FieldTooSmallError,
    WordError,
    build_anchor_product,
    build_family,
    build_interpolant,
    build_normalizer,
    choose_anchors,
    default_window,
    parse_word,
    verify_key_congruence,
    verify_lemma_suite,
    word_total_exponent,
)
from iterroot.epsilon import (
    lift_poly,
    poly_min_exponent,
    shift_poly,
    specialize_epsilon,
)
from iterroot.polynomials import Poly
from iterroot.scalars import QQ, PrimeField

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def q_of(*ints, field=QQ):
    return Poly.from_ints(field, ints)


class TestChooseAnchors:
    def test_rational_default(self):
        anchors = choose_anchors(QQ, 4)
        assert anchors.values == (Fraction(1), Fraction(2), Fraction(3))

    def test_prime_field_default(self):
        anchors = choose_anchors(F3, 3)
        assert anchors.values == (F3.from_int(1), F3.from_int(2))

    def test_field_too_small(self):
        with pytest.raises(FieldTooSmallError):
            choose_anchors(F2, 3)

    def test_enumeration_is_deterministic(self):
        assert choose_anchors(F5, 4) == choose_anchors(F5, 4)
        assert choose_anchors(F5, 4).values == tuple(F5.from_int(i) for i in (1, 2, 3))

    def test_user_anchors_validated(self):
        with pytest.raises(AnchorError):
            choose_anchors(QQ, 3, values=[Fraction(1), Fraction(1)])
        with pytest.raises(AnchorError):
            choose_anchors(QQ, 3, values=[Fraction(1), Fraction(0)])
        with pytest.raises(AnchorError):
            choose_anchors(QQ, 3, values=[Fraction(1)])
        good = choose_anchors(QQ, 3, values=[Fraction(5), Fraction(-2)])
        assert good.values == (Fraction(5), Fraction(-2))


class TestInterpolant:
    def test_order_two(self):
        anchors = Anchors((Fraction(1),))
        assert build_interpolant(anchors, 2, QQ) == q_of(1, 0, -1)

    def test_order_three(self):
        anchors = Anchors((Fraction(1), Fraction(2)))
        L = build_interpolant(anchors, 2, QQ)
        assert L == Poly(QQ, [Fraction(1), Fraction(0), Fraction(9, 4), Fraction(-5, 4)])

    def test_flat_coefficients_vanish(self):
        rng = random.Random(5)
        for r, n in [(2, 4), (3, 3), (4, 5)]:
            anchors = choose_anchors(QQ, r)
            L = build_interpolant(anchors, n, QQ)
            for j in range(1, n):
                assert not L[j]
            assert L.degree <= n + r - 2

    def test_orbit_values(self):
        for field in (QQ, F5):
            anchors = choose_anchors(field, 4)
            L = build_interpolant(anchors, 3, field)
            a = anchors.values
            assert L.evaluate(field.zero) == a[0]
            assert L.evaluate(a[0]) == a[1]
            assert L.evaluate(a[1]) == a[2]
            assert L.evaluate(a[2]) == field.zero

    def test_random_anchor_methods_agree(self):
        # the solver-vs-closed-form comparison runs inside build_interpolant
        rng = random.Random(11)
        for _ in range(10):
            values = rng.sample([1, 2, 3, 4, -1, -2, 5, 7], 3)
            anchors = Anchors(tuple(Fraction(v) for v in values))
            build_interpolant(anchors, rng.randint(2, 5), QQ)
        for _ in range(10):
            values = rng.sample(range(1, 5), 3)
            anchors = Anchors(tuple(F5.from_int(v) for v in values))
            build_interpolant(anchors, rng.randint(2, 5), F5)


class TestAnchorProduct:
    def test_single(self):
        assert build_anchor_product(Anchors((Fraction(1),)), QQ) == q_of(1, -1)

    def test_pair(self):
        R = build_anchor_product(Anchors((Fraction(1), Fraction(2))), QQ)
        assert R == q_of(2, -3, 1)
        assert R.evaluate(Fraction(0)) == 2
        assert R.evaluate(Fraction(1)) == 0
        assert R.evaluate(Fraction(2)) == 0


class TestNormalizer:
    def test_order_two(self):
        assert build_normalizer(Anchors((Fraction(1),)), 2, QQ) == Fraction(-1)

    def test_order_three(self):
        anchors = Anchors((Fraction(1), Fraction(2)))
        assert build_normalizer(anchors, 2, QQ) == Fraction(-8)

    def test_telescoping_identity(self):
        rng = random.Random(3)
        for field in (QQ, F5):
            for r in (2, 3, 4):
                for n in (2, 3, 4):
                    anchors = choose_anchors(field, r)
                    c = build_normalizer(anchors, n, field)
                    R = build_anchor_product(anchors, field)
                    Rp = R.derivative()
                    prod = field.invert(c) * R.evaluate(field.zero)
                    for a in anchors.values:
                        prod = prod * Rp.evaluate(a) * a**n
                    assert prod == field.one


def assemble_reference(data):
    """Independent assembly through generic composition machinery."""
    ring, field = data.ring, data.field
    r, n = data.r, data.n
    w = (r - 1) * (2 * n - 3)
    scaled_x = Poly.monomial(ring, 1, ring.monomial(2 * r))
    R_at = lift_poly(data.anchor_product, ring).compose(scaled_x)
    L_at = lift_poly(data.interpolant, ring).compose(scaled_x)
    c_inv = field.invert(data.normalizer)
    payload = Poly.monomial(ring, n, ring.monomial(r)) + lift_poly(
        data.target, ring
    ).scaled(ring.scalar(c_inv))
    return shift_poly(R_at * payload, w) + shift_poly(L_at, -2 * r)


class TestBuildFamily:
    def test_frozen_simplest_family(self):
        data = build_family(q_of(0, 1), 2)
        ring = data.ring
        expected = Poly(
            ring,
            [
                ring.monomial(-4),
                ring.monomial(1, Fraction(-1)),
                ring.laurent({3: Fraction(1), 4: Fraction(-1), 5: Fraction(1)}),
                ring.monomial(7, Fraction(-1)),
            ],
        )
        assert data.family == expected

    def test_matches_reference_assembly(self):
        rng = random.Random(17)
        for field in (QQ, F5):
            for r in (2, 3, 4):
                for n in (2, 3):
                    coeffs = [rng.randint(-9, 9) for _ in range(n)]
                    data = build_family(Poly.from_ints(field, coeffs), r, n=n)
                    assert data.family == assemble_reference(data)

    def test_degree_bound(self):
        rng = random.Random(23)
        for r in (2, 3, 4):
            for n in (2, 3, 4, 5):
                data = build_family(q_of(*[rng.randint(-9, 9) for _ in range(n)]), r, n=n)
                assert data.family.degree <= n + r - 1
                assert data.degree_bound == n + r - 1

    def test_identity_order_bypass(self):
        Q = q_of(3, 1, 2)
        data = build_family(Q, 1)
        assert data.family == lift_poly(Q, data.ring)
        assert verify_key_congruence(data).passed
        assert verify_lemma_suite(data).passed

    def test_degree_parameter_rules(self):
        assert build_family(q_of(0, 1), 2).n == 2
        assert build_family(q_of(1, 2, 3), 2).n == 3
        assert build_family(q_of(7), 2).n == 2  # constants still need n = 2
        assert build_family(Poly.zero(QQ), 2).n == 2
        forced = build_family(q_of(0, 1), 2, n=5)
        assert forced.n == 5
        with pytest.raises(ValueError):
            build_family(q_of(1, 2, 3, 4), 2, n=3)

    def test_small_field_rejected(self):
        with pytest.raises(FieldTooSmallError):
            build_family(Poly.from_ints(F2, [0, 1]), 3)


class TestKeyCongruence:
    def test_simplest_over_q(self):
        report = verify_key_congruence(build_family(q_of(0, 1), 2))
        assert report.passed
        assert report.window is None
        assert report.iterate_degree_computed == 9

    def test_cubic_orbit_over_f5(self):
        data = build_family(Poly.from_ints(F5, [1, 0, 1]), 3)
        report = verify_key_congruence(data)
        assert report.passed

    def test_constant_target(self):
        report = verify_key_congruence(build_family(q_of(7), 2))
        assert report.passed

    def test_zero_target(self):
        report = verify_key_congruence(build_family(Poly.zero(QQ), 2))
        assert report.passed

    def test_residual_lives_in_polynomial_ring(self):
        data = build_family(q_of(0, 1), 2)
        report = verify_key_congruence(data, window=None)
        assert report.passed
        assert data.residual is not None
        assert poly_min_exponent(data.residual) >= 0

    def test_iterate_degree_multiplicative(self):
        data = build_family(q_of(2, -1), 2)
        report = verify_key_congruence(data, window=None)
        assert report.iterate_degree_computed == data.family.degree**2

    def test_windowed_matches_exact_verdict(self):
        data = build_family(q_of(3, 1, -2), 2)
        exact = verify_key_congruence(data, window=None)
        windowed = verify_key_congruence(data, window=default_window(2, 3))
        assert exact.passed and windowed.passed
        assert windowed.floor_seen is not None
        assert windowed.window == default_window(2, 3)

    def test_forced_window_on_heavy_order(self):
        data = build_family(q_of(1, 1), 4)
        report = verify_key_congruence(data)  # auto picks a window here
        assert report.passed
        assert report.window is not None


class TestLemmaSuite:
    def test_simplest_family_suite(self):
        data = build_family(q_of(0, 1), 2)
        report = verify_lemma_suite(data)
        assert report.passed
        names = {c.name for c in report.checks}
        assert "derivative-at-orbit-point" in names
        assert "derivative-order-bound" in names
        assert "first-iterate-expansion" in names
        assert "orbit-iterate-expansion" in names
        assert "normalizer-telescopes-to-one" in names

    def test_orbit_endpoint_reproves_congruence(self):
        data = build_family(q_of(2, 3), 3)
        report = verify_lemma_suite(data)
        endpoint = [
            c
            for c in report.checks
            if c.name == "orbit-iterate-expansion" and c.params["k"] == 3
        ]
        assert endpoint and endpoint[0].passed
        assert endpoint[0].params["modulus_exponent"] == 1

    def test_suite_over_prime_field(self):
        data = build_family(Poly.from_ints(F5, [1, 0, 1]), 3)
        assert verify_lemma_suite(data).passed

    def test_sampled_grid(self):
        rng = random.Random(29)
        for field in (QQ, F5):
            for r in (2, 3):
                for n in (2, 4):
                    coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(0, n))]
                    data = build_family(Poly.from_ints(field, coeffs), r, n=n)
                    assert verify_key_congruence(data).passed
                    assert verify_lemma_suite(data).passed

    def test_random_anchors(self):
        rng = random.Random(31)
        for _ in range(5):
            values = tuple(Fraction(v) for v in rng.sample([2, -1, 3, 5, -4], 2))
            data = build_family(q_of(1, 1), 3, anchors=values)
            assert verify_key_congruence(data).passed
            assert verify_lemma_suite(data).passed


class TestSpecializeIterateCommute:
    def test_random_cases(self):
        rng = random.Random(37)
        for _ in range(6):
            n = rng.randint(2, 4)
            Q = q_of(*[rng.randint(-5, 5) for _ in range(n)])
            data = build_family(Q, 2, n=n)
            _, iters = data.iterates(None)
            e = Fraction(rng.randint(1, 9), rng.randint(10, 99))
            direct = specialize_epsilon(data.family, e).iterate(2)
            through = specialize_epsilon(iters[-1], e)
            assert direct == through

    def test_deeper_orbit(self):
        data = build_family(q_of(1, 1), 3)
        _, iters = data.iterates(None)
        e = Fraction(1, 7)
        assert specialize_epsilon(data.family, e).iterate(3) == specialize_epsilon(
            iters[-1], e
        )


class TestWords:
    def test_parse_and_total(self):
        assert parse_word("x1^2 x2^3") == [(1, 2), (2, 3)]
        assert word_total_exponent(parse_word("x1^2 x2^3")) == 5
        assert word_total_exponent(parse_word("x1")) == 1
        assert word_total_exponent(parse_word("x2 x2 x2")) == 3

    def test_empty_word_rejected(self):
        with pytest.raises(WordError):
            parse_word("")
        with pytest.raises(WordError):
            word_total_exponent([])

    def test_bad_tokens(self):
        with pytest.raises(WordError):
            parse_word("y1")
        with pytest.raises(WordError):
            parse_word("x0")
        with pytest.raises(WordError):
            parse_word("x1^0")
        with pytest.raises(WordError):
            word_total_exponent([(1, 0)])
