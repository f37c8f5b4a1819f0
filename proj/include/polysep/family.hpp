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

#ifndef POLYSEP_FAMILY_HPP
#define POLYSEP_FAMILY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "polysep/bigint.hpp"
#include "polysep/catalan.hpp"
#include "polysep/errors.hpp"
#include "polysep/poly.hpp"
#include "polysep/real.hpp"

namespace polysep {

// The degree-d family built from Catalan-number coefficients. Written
// P(d, a) below; degree exactly d, height growing like a^(2d-2), and a pair
// of real roots near -1/(2 c_{d-2} a^{d-1}) separated by only
// 2 delta0 a^(-d^2 + d/2 + 1).

inline void check_family_params(long d, long a) {
    if (d < 3) throw std::invalid_argument("family: degree parameter d must be >= 3");
    if (a < 1) throw std::invalid_argument("family: parameter a must be >= 1");
}

// a^(num/den) with den 1 or 2; the exact exponent of the close-pair scale.
struct AExponent {
    long num = 0;
    int den = 1;

    Real value(long a, mpfr_prec_t prec) const {
        unsigned long mag = static_cast<unsigned long>(num < 0 ? -num : num);
        Real r = Real::of(int_pow(a, mag), prec + 64);
        if (den == 2) r = sqrt(r);
        if (num < 0) r = 1L / r;
        return r.at_prec(prec);
    }
};

struct ClosePairPrediction {
    BigRat x0;             // leading-order double-root location, exact rational
    Real delta0;           // 1 / (2^(d-1/2) c_{d-2}^(d+1/2))
    AExponent h;           // close-pair scale a^(-d^2+d/2+1) as an exact exponent pair
    Real sep_pred;         // 2 * delta0 * h(a)
    BigRat exp_pred;       // (2d^2-d-2) / (4(d-1))
    BigRat exp_pred_monic; // exp_pred - 1, for the reciprocal (monic) variant
};

// g(a,x) = 2 c_0 a x^(d-1) + 2 c_1 a^2 x^(d-2) + ... + 2 c_{d-2} a^(d-1) x.
// Zero constant term; coefficient of x^(d-1-k) is 2 c_k a^(k+1).
inline IntPolynomial g_poly(long d, long a) {
    check_family_params(d, a);
    std::vector<BigInt> c(static_cast<std::size_t>(d));
    for (long k = 0; k <= d - 2; ++k)
        c[static_cast<std::size_t>(d - 1 - k)] =
            2 * catalan(k) * int_pow(a, static_cast<unsigned long>(k + 1));
    return IntPolynomial(std::move(c));
}

// The four blocks assembled literally:
//   g^2
//   - (4 c_1 a^2 x^(2d-2) + 4 c_2 a^3 x^(2d-3) + ... + 4 c_{d-2} a^(d-1) x^(d+1))
//   + (4 c_1 a^2 x^(d-2)  + 4 c_2 a^3 x^(d-3)  + ... + 4 c_{d-2} a^(d-1) x)
//   + 4 a x^(d-1) - 2 x^d + 1
// Everything above x^d cancels exactly (this is the Catalan recurrence in
// action); a surviving coefficient there is an implementation bug.
inline IntPolynomial construct_expanded(long d, long a) {
    check_family_params(d, a);
    IntPolynomial g = g_poly(d, a);
    IntPolynomial g2 = mul(g, g);
    std::vector<BigInt> acc(static_cast<std::size_t>(2 * d - 1));
    for (std::size_t i = 0; i < g2.size(); ++i) acc[i] = g2.coeff(i);
    for (long k = 1; k <= d - 2; ++k) {
        BigInt t = 4 * catalan(k) * int_pow(a, static_cast<unsigned long>(k + 1));
        acc[static_cast<std::size_t>(2 * d - 1 - k)] -= t;
        acc[static_cast<std::size_t>(d - 1 - k)] += t;
    }
    acc[static_cast<std::size_t>(d - 1)] += 4 * a;
    acc[static_cast<std::size_t>(d)] -= 2;
    acc[0] += 1;
    for (long i = d + 1; i <= 2 * d - 2; ++i)
        if (acc[static_cast<std::size_t>(i)] != 0)
            throw std::logic_error("construct_expanded: coefficient of x^" +
                                   std::to_string(i) + " failed to cancel");
    acc.resize(static_cast<std::size_t>(d + 1));
    IntPolynomial p(std::move(acc));
    if (p.is_zero() || p.degree() != static_cast<std::size_t>(d))
        throw std::logic_error("construct_expanded: degree is not d");
    return p;
}

// Compact form (1 + g)^2 + x^d (4 a x^(d-1) - 2 (1 + g)). Must agree with
// construct_expanded coefficientwise; the two routes are kept as a
// permanent cross-check.
inline IntPolynomial construct_compact(long d, long a) {
    check_family_params(d, a);
    IntPolynomial one_plus_g = add(IntPolynomial{1}, g_poly(d, a));
    IntPolynomial head = mul(one_plus_g, one_plus_g);
    IntPolynomial tail = sub(IntPolynomial::monomial(BigInt(4) * a, static_cast<std::size_t>(d - 1)),
                             scale(one_plus_g, 2));
    return add(head, shift_up(tail, static_cast<std::size_t>(d)));
}

// Closed-form height 4 c_{d-2}^2 a^(2d-2) + 4 c_{d-3} a^(d-2); equals the
// coefficient of x^2.
inline BigInt height_formula(long d, long a) {
    check_family_params(d, a);
    return 4 * catalan(d - 2) * catalan(d - 2) * int_pow(a, static_cast<unsigned long>(2 * d - 2)) +
           4 * catalan(d - 3) * int_pow(a, static_cast<unsigned long>(d - 2));
}

// Comparison family x^d - 2(ax - 1)^2, height 2a^2 for a >= 2; its close
// pair separates only like a^(-(d+2)/2).
inline IntPolynomial mignotte_family(long d, long a) {
    check_family_params(d, a);
    std::vector<BigInt> c(static_cast<std::size_t>(d + 1));
    c[0] = -2;
    c[1] = 4 * BigInt(a);
    c[2] += -2 * BigInt(a) * a;
    c[static_cast<std::size_t>(d)] += 1;
    return IntPolynomial(std::move(c));
}

inline ClosePairPrediction predict(long d, long a, mpfr_prec_t prec = 128) {
    check_family_params(d, a);
    if (prec < 64) prec = 64;
    ClosePairPrediction pr;
    BigInt c = catalan(d - 2);
    pr.x0 = make_rat(BigInt(-1), 2 * c * int_pow(a, static_cast<unsigned long>(d - 1)));
    // delta0 = 1/(2^(d-1/2) c^(d+1/2)) = 1/sqrt(2^(2d-1) c^(2d+1)), exact
    // integer under the square root.
    BigInt under = int_pow(BigInt(2), static_cast<unsigned long>(2 * d - 1)) *
                   int_pow(c, static_cast<unsigned long>(2 * d + 1));
    pr.delta0 = 1L / sqrt(Real::of(under, prec));
    pr.h.num = -2 * d * d + d + 2;
    pr.h.den = 2;
    if (pr.h.num % 2 == 0) {
        pr.h.num /= 2;
        pr.h.den = 1;
    }
    pr.sep_pred = ldexp2(pr.delta0, 1) * pr.h.value(a, prec);
    pr.exp_pred = make_rat(BigInt(2 * d * d - d - 2), BigInt(4 * (d - 1)));
    pr.exp_pred_monic = pr.exp_pred - 1;
    return pr;
}

struct FamilyInstance {
    long d = 0;
    long a = 0;
    IntPolynomial poly;
    ClosePairPrediction prediction;
};

// Builds P(d, a) through both construction routes, checks they agree and
// that the degree/constant/leading invariants hold, and attaches the
// close-pair prediction.
inline FamilyInstance make_family_instance(long d, long a, mpfr_prec_t prec = 128) {
    FamilyInstance inst;
    inst.d = d;
    inst.a = a;
    inst.poly = construct_compact(d, a);
    if (inst.poly != construct_expanded(d, a))
        throw std::logic_error("family: expanded and compact constructions disagree");
    if (inst.poly.constant_term() != 1)
        throw std::logic_error("family: constant term is not 1");
    BigInt lc = 4 * catalan(d - 1) * int_pow(a, static_cast<unsigned long>(d)) - 2;
    if (inst.poly.leading() != lc)
        throw std::logic_error("family: leading coefficient mismatch");
    inst.prediction = predict(d, a, prec);
    return inst;
}

struct RationalInterval {
    BigRat lo, hi;
    BigRat mid() const { return (lo + hi) / 2; }
    BigRat width() const { return hi - lo; }
};

// Brackets the root of 1 + g near -1/(2 c_{d-2} a^(d-1)) by plain bisection
// with exact sign evaluations, down to the requested width. The initial
// interval is (-1/(c_{d-2} a^(d-1)), 0); 1+g is positive at 0 and must be
// negative at the left end, which holds once a clears the small-parameter
// regime (at a = 1 it can fail, hence the precondition).
inline RationalInterval refine_x0(long d, long a, const BigRat& target_width) {
    check_family_params(d, a);
    if (a < 2) throw std::invalid_argument("refine_x0: requires a >= 2");
    if (target_width <= 0) throw std::invalid_argument("refine_x0: target width must be > 0");
    IntPolynomial f = add(IntPolynomial{1}, g_poly(d, a));
    BigRat lo = make_rat(BigInt(-1), catalan(d - 2) * int_pow(a, static_cast<unsigned long>(d - 1)));
    BigRat hi = 0;
    int s_lo = f.sign_at(lo);
    if (s_lo == 0) return {lo, lo};
    if (s_lo > 0)
        throw ThresholdError("refine_x0: 1+g does not change sign on the initial interval at d=" +
                             std::to_string(d) + ", a=" + std::to_string(a));
    while (hi - lo > target_width) {
        BigRat m = (lo + hi) / 2;
        int s = f.sign_at(m);
        if (s == 0) return {m, m};
        if (s < 0)
            lo = m;
        else
            hi = m;
    }
    return {lo, hi};
}

}  // namespace polysep

#endif
