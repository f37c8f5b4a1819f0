/*
   Copyright 2026 The polysep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "polysep/catalan.hpp"
#include "polysep/family.hpp"

using namespace polysep;

TEST_CASE("catalan numbers") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (long i = 0; i < 9; ++i) CHECK(catalan(i) == expected[i]);
    CHECK(catalan(20) == BigInt("6564120420"));
    // c_4 via the recurrence, written out
    CHECK(catalan(4) == catalan(0) * catalan(3) + catalan(1) * catalan(2) +
                            catalan(2) * catalan(1) + catalan(3) * catalan(0));
    for (long i = 0; i + 1 <= 30; ++i) {
        BigInt s = 0;
        for (long k = 0; k <= i; ++k) s += catalan(k) * catalan(i - k);
        REQUIRE(s == catalan(i + 1));
    }
    CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("g polynomial") {
    CHECK(g_poly(3, 1) == IntPolynomial{0, 2, 2});
    CHECK(g_poly(4, 2) == IntPolynomial{0, 32, 8, 4});
    CHECK(g_poly(6, 3).constant_term() == 0);
    CHECK(g_poly(6, 3).degree() == 5);
    CHECK_THROWS_AS(g_poly(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(g_poly(3, 0), std::invalid_argument);
}

TEST_CASE("construction examples") {
    CHECK(construct_expanded(3, 2) == IntPolynomial{1, 16, 72, 62});
    CHECK(construct_expanded(4, 1) == IntPolynomial{1, 8, 20, 20, 18});
    CHECK(construct_expanded(5, 1) == IntPolynomial{1, 20, 108, 84, 60, 54});
    CHECK(construct_compact(3, 1) == IntPolynomial{1, 4, 8, 6});
    CHECK(construct_compact(3, 2) == IntPolynomial{1, 16, 72, 62});
    CHECK(construct_compact(4, 1) == IntPolynomial{1, 8, 20, 20, 18});
    CHECK_THROWS_AS(construct_expanded(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(construct_compact(3, -1), std::invalid_argument);
}

TEST_CASE("degree collapse and route agreement") {
    for (long d = 3; d <= 12; ++d) {
        for (long a = 1; a <= 20; ++a) {
            IntPolynomial pe = construct_expanded(d, a);  // throws if a high term survives
            REQUIRE(pe.degree() == static_cast<std::size_t>(d));
            REQUIRE(pe == construct_compact(d, a));
        }
    }
}

TEST_CASE("small-degree families match their closed forms") {
    for (long a = 1; a <= 10; ++a) {
        BigInt A(a);
        IntPolynomial p3{std::vector<BigInt>{
            BigInt(1), 4 * A * A, 4 * int_pow(A, 4) + 4 * A, 8 * int_pow(A, 3) - 2}};
        IntPolynomial p4{std::vector<BigInt>{BigInt(1), 8 * int_pow(A, 3),
                                             16 * int_pow(A, 6) + 4 * A * A,
                                             16 * int_pow(A, 5) + 4 * A,
                                             20 * int_pow(A, 4) - 2}};
        IntPolynomial p5{std::vector<BigInt>{
            BigInt(1), 20 * int_pow(A, 4), 100 * int_pow(A, 8) + 8 * int_pow(A, 3),
            80 * int_pow(A, 7) + 4 * A * A, 56 * int_pow(A, 6) + 4 * A,
            56 * int_pow(A, 5) - 2}};
        REQUIRE(construct_compact(3, a) == p3);
        REQUIRE(construct_compact(4, a) == p4);
        REQUIRE(construct_compact(5, a) == p5);
    }
}

TEST_CASE("height formula and attainment at x^2") {
    CHECK(height_formula(4, 2) == 1040);
    CHECK(height_formula(3, 1) == 8);
    CHECK(height_formula(5, 1) == 108);
    for (long d = 3; d <= 10; ++d) {
        for (long a = 1; a <= 50; ++a) {
            IntPolynomial p = construct_compact(d, a);
            BigInt h = p.height();
            REQUIRE(h == height_formula(d, a));
            REQUIRE(abs(p.coeff(2)) == h);
        }
    }
}

TEST_CASE("leading and constant coefficients") {
    for (long d = 3; d <= 10; ++d) {
        for (long a = 1; a <= 50; ++a) {
            IntPolynomial p = construct_compact(d, a);
            REQUIRE(p.constant_term() == 1);
            REQUIRE(p.leading() ==
                    4 * catalan(d - 1) * int_pow(a, static_cast<unsigned long>(d)) - 2);
        }
    }
}

TEST_CASE("family discriminants are nonzero") {
    for (long d = 3; d <= 10; ++d)
        for (long a = 1; a <= 50; ++a)
            REQUIRE(construct_compact(d, a).discriminant() != 0);
}

TEST_CASE("close-pair prediction") {
    const mpfr_prec_t prec = 128;
    ClosePairPrediction p3 = predict(3, 10, prec);
    ClosePairPrediction p4 = predict(4, 10, prec);
    ClosePairPrediction p5 = predict(5, 10, prec);

    // delta0(4) = 1/(2^3.5 * 2^4.5) = 1/256, exactly representable
    CHECK(p4.delta0 == ldexp2(Real::of(1L, prec), -8));

    Real tol = ldexp2(Real::of(1L, prec), -100);
    CHECK(abs(p3.delta0 - sqrt(Real::of(2L, prec)) / 8L) <= tol);
    CHECK(abs(p5.delta0 - sqrt(Real::of(10L, prec)) / 500000L) <= tol);

    CHECK(p3.exp_pred == make_rat(13, 8));
    CHECK(p4.exp_pred == make_rat(13, 6));
    CHECK(p5.exp_pred == make_rat(43, 16));
    CHECK(p4.exp_pred_monic == make_rat(7, 6));

    // h exponent pairs: odd d keeps the half power
    CHECK((p3.h.num == -13 && p3.h.den == 2));
    CHECK((p4.h.num == -13 && p4.h.den == 1));
    CHECK((p5.h.num == -43 && p5.h.den == 2));

    // x0 leading term -1/(2 c_{d-2} a^{d-1})
    CHECK(p3.x0 == make_rat(-1, 200));
    CHECK(p5.x0 == make_rat(-1, 100000));

    // sep_pred(3, 10) = (sqrt(2)/4) * 10^(-13/2)
    Real expected = sqrt(Real::of(2L, prec)) / 4L / sqrt(Real::of(int_pow(10, 13), prec));
    CHECK(abs(p3.sep_pred - expected) <= expected * ldexp2(Real::of(1L, prec), -100));

    // the two exponent formulas agree exactly as rationals
    for (long d = 3; d <= 100; ++d) {
        ClosePairPrediction pr = predict(d, 2, 64);
        REQUIRE(pr.exp_pred ==
                make_rat(BigInt(d), BigInt(2)) + make_rat(BigInt(d - 2), BigInt(4 * (d - 1))));
    }

    CHECK_THROWS_AS(predict(2, 10), std::invalid_argument);
}

TEST_CASE("refine_x0") {
    // d=3: 1+g = 2a x^2 + 2a^2 x + 1, root near zero is (-a^2+sqrt(a^4-2a))/(2a)
    const mpfr_prec_t prec = 256;
    Real a = Real::of(10L, prec);
    Real oracle = (-(a * a) + sqrt(a * a * a * a - a * 2L)) / (a * 2L);
    RationalInterval iv = refine_x0(3, 10, make_rat(1, 10000000000L));
    REQUIRE(iv.width() <= make_rat(1, 10000000000L));
    REQUIRE(oracle.cmp(iv.lo) >= 0);
    REQUIRE(oracle.cmp(iv.hi) <= 0);

    // d=4, a=10: midpoint is -(1/4) a^-3 to leading order
    RationalInterval iv4 = refine_x0(4, 10, make_rat(1, BigInt("1000000000000")));
    CHECK(abs(iv4.mid() - make_rat(-1, 4000)) <= make_rat(1, 1000000));

    // 1 + g is 1 at the origin
    CHECK(add(IntPolynomial{1}, g_poly(5, 9)).eval_rational(BigRat(0)) == 1);

    CHECK_THROWS_AS(refine_x0(3, 1, make_rat(1, 100)), std::invalid_argument);
    CHECK_THROWS_AS(refine_x0(3, 10, BigRat(0)), std::invalid_argument);
}

TEST_CASE("mignotte family") {
    CHECK(mignotte_family(4, 3) == IntPolynomial{-2, 12, -18, 0, 1});
    for (long d = 3; d <= 8; ++d) CHECK(mignotte_family(d, 1).constant_term() == -2);
    CHECK(mignotte_family(5, 10).height() == 200);
    for (long d : {3L, 4L, 5L, 8L})
        for (long a = 2; a <= 50; ++a)
            REQUIRE(mignotte_family(d, a).height() == 2 * BigInt(a) * a);
    CHECK_THROWS_AS(mignotte_family(2, 3), std::invalid_argument);
}

TEST_CASE("family instance invariants") {
    FamilyInstance inst = make_family_instance(5, 7);
    CHECK(inst.poly.degree() == 5);
    CHECK(inst.poly.constant_term() == 1);
    CHECK(inst.poly.leading() == 4 * catalan(4) * int_pow(7, 5) - 2);
    CHECK(inst.prediction.exp_pred == make_rat(43, 16));
}
