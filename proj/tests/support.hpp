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

// Test-only oracles, independent of the implementation paths they check.

#ifndef POLYSEP_TESTS_SUPPORT_HPP
#define POLYSEP_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "polysep/poly.hpp"
#include "polysep/real.hpp"
#include "polysep/rootfind.hpp"

namespace testsupport {

using polysep::BigInt;
using polysep::BigRat;
using polysep::Complex;
using polysep::IntPolynomial;
using polysep::Real;
using polysep::RootSet;

inline IntPolynomial random_poly(std::mt19937& rng, int deg, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = dist(rng);
    while (c.back() == 0) c.back() = dist(rng);
    return IntPolynomial(std::move(c));
}

// Schoolbook multiplication written as a per-output-coefficient
// convolution, structurally different from the library's accumulation.
inline IntPolynomial mul_oracle(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return IntPolynomial();
    std::vector<BigInt> r(p.size() + q.size() - 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        BigInt s = 0;
        for (std::size_t i = 0; i <= k && i < p.size(); ++i)
            if (k - i < q.size()) s += p.coeff(i) * q.coeff(k - i);
        r[k] = s;
    }
    return IntPolynomial(std::move(r));
}

// Degree of gcd(p, q) by monic Euclid over the rationals; -1 for gcd of
// two zero polynomials.
inline long gcd_degree(const IntPolynomial& p, const IntPolynomial& q) {
    using RPoly = std::vector<BigRat>;
    auto conv = [](const IntPolynomial& f) {
        RPoly v;
        for (const BigInt& c : f.coeffs()) v.emplace_back(c);
        return v;
    };
    auto norm = [](RPoly& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    RPoly A = conv(p), B = conv(q);
    norm(A);
    norm(B);
    while (!B.empty()) {
        while (A.size() >= B.size()) {
            BigRat f = A.back() / B.back();
            std::size_t off = A.size() - B.size();
            for (std::size_t i = 0; i + 1 < B.size(); ++i) A[off + i] -= f * B[i];
            A.pop_back();
            norm(A);
            if (A.empty()) break;
        }
        std::swap(A, B);
    }
    return A.empty() ? -1 : static_cast<long>(A.size()) - 1;
}

// Rebuilds lc * prod (x - z_i) from a computed root set and compares each
// coefficient against the exact one, relative to max(|coeff|, 1), at
// tolerance 2^(-prec/2).
inline bool reconstruction_ok(const IntPolynomial& p, const RootSet& rs) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(rs.prec_bits);
    std::vector<Complex> coef;
    coef.emplace_back(Real::of(1L, prec), Real(prec));
    for (const Complex& z : rs.roots) {
        std::vector<Complex> nxt(coef.size() + 1, Complex(prec));
        for (std::size_t i = 0; i < coef.size(); ++i) {
            nxt[i + 1] = nxt[i + 1] + coef[i];
            nxt[i] = nxt[i] - coef[i] * z;
        }
        coef = std::move(nxt);
    }
    const Real lc = Real::of(p.leading(), prec);
    const Real one = Real::of(1L, prec);
    const Real tol = ldexp2(one, -static_cast<long>(prec) / 2);
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        Real exact = Real::of(p.coeff(i), prec);
        Real scale = abs(exact) > one ? abs(exact) : one;
        if (abs(coef[i].re * lc - exact) > scale * tol) return false;
        if (abs(coef[i].im * lc) > scale * tol) return false;
    }
    return true;
}

}  // namespace testsupport

#endif
