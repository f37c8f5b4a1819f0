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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "polysep/poly.hpp"
#include "support.hpp"

using namespace polysep;
using testsupport::gcd_degree;
using testsupport::mul_oracle;
using testsupport::random_poly;

TEST_CASE("degree") {
    CHECK(IntPolynomial{1}.degree() == 0);
    CHECK(IntPolynomial{1, 4, 8, 6}.degree() == 3);
    CHECK_THROWS_AS(IntPolynomial().degree(), std::domain_error);
}

TEST_CASE("height") {
    CHECK(IntPolynomial{1, -5, 2}.height() == 5);
    CHECK(IntPolynomial{1, 64, 1040, 520, 318}.height() == 1040);
    CHECK(IntPolynomial{7}.height() == 7);
    CHECK_THROWS_AS(IntPolynomial().height(), std::domain_error);
}

TEST_CASE("ring operations") {
    CHECK(mul(IntPolynomial{-1, 1}, IntPolynomial{1, 1}) == IntPolynomial{-1, 0, 1});
    CHECK(add(IntPolynomial{1, 2}, IntPolynomial{0, -2}) == IntPolynomial{1});
    CHECK(scale(IntPolynomial{1, 3}, BigInt(-2)) == IntPolynomial{-2, -6});
    CHECK(mul(IntPolynomial(), IntPolynomial{1, 2}).is_zero());
    CHECK(scale(IntPolynomial{1, 2}, BigInt(0)).is_zero());
}

TEST_CASE("eval_rational") {
    IntPolynomial p{1, 0, -1};
    CHECK(p.eval_rational(make_rat(1, 2)) == BigRat(3, 4));
    IntPolynomial p31{1, 4, 8, 6};
    CHECK(p31.eval_rational(BigRat(0)) == 1);
    CHECK(p31.eval_rational(make_rat(-1, 2)) == BigRat(1, 4));
}

TEST_CASE("eval_complex") {
    IntPolynomial p{-1, 0, 1};
    Complex z(Real::of(1L, 64), Real(64));
    CHECK(p.eval_complex(z, 64).is_zero());

    CHECK(IntPolynomial{1}.eval_complex(z, 64).re == Real::of(1L, 64));

    // residual at an approximate root stays below 2^(-prec+4) * height * degree
    const mpfr_prec_t prec = 128;
    IntPolynomial q{-2, 0, 1};
    Complex s2(sqrt(Real::of(2L, prec)), Real(prec));
    Real residual = abs(q.eval_complex(s2, prec));
    CHECK(residual <= ldexp2(Real::of(1L, prec), -prec + 4) * 2L * 2L);

    CHECK_THROWS_AS(p.eval_complex(z, 16), std::invalid_argument);
}

TEST_CASE("derivative") {
    CHECK(IntPolynomial{1, 4, 8, 6}.derivative() == IntPolynomial{4, 16, 18});
    CHECK(IntPolynomial{5}.derivative().is_zero());
    CHECK(IntPolynomial{0, 0, 1}.derivative() == IntPolynomial{0, 2});
}

TEST_CASE("reciprocal") {
    CHECK(IntPolynomial{1, 64, 1040, 520, 318}.reciprocal() ==
          IntPolynomial{318, 520, 1040, 64, 1});
    CHECK(IntPolynomial{1}.reciprocal() == IntPolynomial{1});
    CHECK(IntPolynomial{1, 3, 1}.reciprocal() == IntPolynomial{1, 3, 1});
    // degree drops when the constant term vanishes
    CHECK(IntPolynomial{0, 0, 3, 2}.reciprocal() == IntPolynomial{2, 3});
}

TEST_CASE("reciprocal involution") {
    std::mt19937 rng(7001);
    std::uniform_int_distribution<int> degd(0, 8);
    for (int it = 0; it < 200; ++it) {
        IntPolynomial p = random_poly(rng, degd(rng), 1000);
        if (p.constant_term() == 0) continue;
        CHECK(p.reciprocal().reciprocal() == p);
    }
}

TEST_CASE("discriminant") {
    CHECK(IntPolynomial{2, -3, 1}.discriminant() == 1);
    CHECK(IntPolynomial{-1, 0, 0, 1}.discriminant() == -27);
    CHECK(IntPolynomial{1, -2, 1}.discriminant() == 0);
    CHECK_THROWS_AS((IntPolynomial{1, 1}).discriminant(), std::domain_error);
    CHECK_THROWS_AS(IntPolynomial().discriminant(), std::domain_error);
}

TEST_CASE("ring laws against the schoolbook oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> degd(0, 6);
    std::uniform_int_distribution<long> xnum(-20, 20), xden(1, 20);
    for (int it = 0; it < 1000; ++it) {
        IntPolynomial p = random_poly(rng, degd(rng), 100);
        IntPolynomial q = random_poly(rng, degd(rng), 100);
        IntPolynomial r = random_poly(rng, degd(rng), 100);
        IntPolynomial pq = mul(p, q);
        REQUIRE(pq == mul_oracle(p, q));
        REQUIRE(pq == mul(q, p));
        REQUIRE(mul(pq, r) == mul(p, mul(q, r)));
        REQUIRE(pq.degree() == p.degree() + q.degree());
        BigRat x = make_rat(xnum(rng), xden(rng));
        REQUIRE(pq.eval_rational(x) == p.eval_rational(x) * q.eval_rational(x));
    }
}

TEST_CASE("discriminant vanishes exactly on non-squarefree input") {
    std::mt19937 rng(99331);
    std::uniform_int_distribution<int> degd(2, 6), small(1, 2), pick(0, 2);
    int zero_cases = 0;
    for (int it = 0; it < 400; ++it) {
        IntPolynomial p;
        if (it % 3 == 0) {
            // engineered repeated factor: s^2 * t
            IntPolynomial s = random_poly(rng, small(rng), 10);
            IntPolynomial t = random_poly(rng, pick(rng), 10);
            p = mul(mul(s, s), t);
            if (p.degree() < 2 || p.degree() > 6) continue;
        } else {
            p = random_poly(rng, degd(rng), 100);
        }
        bool disc_zero = (p.discriminant() == 0);
        bool gcd_nonconst = gcd_degree(p, p.derivative()) >= 1;
        REQUIRE(disc_zero == gcd_nonconst);
        if (disc_zero) ++zero_cases;
    }
    REQUIRE(zero_cases > 50);  // the engineered branch must actually fire
}
