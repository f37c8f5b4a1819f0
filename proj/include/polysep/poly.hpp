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

#ifndef POLYSEP_POLY_HPP
#define POLYSEP_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysep/bigint.hpp"
#include "polysep/real.hpp"

namespace polysep {

// Dense integer polynomial, coefficients ascending (index i = coefficient
// of x^i). Normalized: no trailing zero entries; the zero polynomial is the
// empty sequence. Degrees stay small here while coefficients get huge, so
// density costs nothing.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    IntPolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    // k * x^n
    static IntPolynomial monomial(const BigInt& k, std::size_t n) {
        if (k == 0) return IntPolynomial();
        std::vector<BigInt> c(n + 1);
        c[n] = k;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    // Coefficient of x^i; zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const {
        static const BigInt kZero = 0;
        return i < c_.size() ? c_[i] : kZero;
    }

    std::size_t degree() const {
        if (c_.empty()) throw std::domain_error("degree undefined for the zero polynomial");
        return c_.size() - 1;
    }

    BigInt height() const {
        if (c_.empty()) throw std::domain_error("height undefined for the zero polynomial");
        BigInt h = 0;
        for (const BigInt& v : c_) {
            BigInt a = abs(v);
            if (a > h) h = a;
        }
        return h;
    }

    const BigInt& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    const BigInt& constant_term() const { return coeff(0); }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    friend IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) {
        std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return IntPolynomial();
        std::vector<BigInt> r(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial scale(const IntPolynomial& p, const BigInt& k) {
        if (k == 0) return IntPolynomial();
        std::vector<BigInt> r(p.c_);
        for (BigInt& v : r) v *= k;
        return IntPolynomial(std::move(r));
    }

    // p * x^n
    friend IntPolynomial shift_up(const IntPolynomial& p, std::size_t n) {
        if (p.is_zero()) return IntPolynomial();
        std::vector<BigInt> r(p.c_.size() + n);
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i + n] = p.c_[i];
        return IntPolynomial(std::move(r));
    }

    // Exact Horner evaluation in rational arithmetic.
    BigRat eval_rational(const BigRat& x) const {
        BigRat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
        return acc;
    }

    int sign_at(const BigRat& x) const { return static_cast<int>(sgn(eval_rational(x))); }

    // Horner evaluation carried out entirely at prec_bits working precision.
    Complex eval_complex(const Complex& z, mpfr_prec_t prec_bits) const {
        if (prec_bits < 32) throw std::invalid_argument("eval_complex requires prec_bits >= 32");
        return eval_complex_with_bound(z, prec_bits).first;
    }

    // Same, also returning the running majorant sum |c_i| * |z|^i. The true
    // rounding error of the Horner value is below majorant * 2d * 2^-prec,
    // which is what the root finder uses to detect the noise floor.
    std::pair<Complex, Real> eval_complex_with_bound(const Complex& z,
                                                     mpfr_prec_t prec_bits) const {
        Complex zz(z.re.at_prec(prec_bits), z.im.at_prec(prec_bits));
        Real az = abs(zz);
        Complex acc(prec_bits);
        Real bound(prec_bits);
        if (c_.empty()) return {acc, bound};
        for (std::size_t i = c_.size(); i-- > 0;) {
            Real ci = Real::of(c_[i], prec_bits);
            acc = acc * zz;
            acc.re += ci;
            bound = bound * az + abs(ci);
        }
        return {acc, bound};
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return IntPolynomial(std::move(r));
    }

    // Reversed coefficient sequence, x^deg * p(1/x). When the constant term
    // vanishes the degree drops (leading zeros of the reversal are stripped).
    IntPolynomial reciprocal() const {
        std::vector<BigInt> r(c_.rbegin(), c_.rend());
        std::size_t lead = 0;
        while (lead < r.size() && r[lead] == 0) ++lead;
        r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lead));
        return IntPolynomial(std::move(r));
    }

    // Exact discriminant: resultant of p and p' by fraction-free Bareiss
    // elimination on the Sylvester matrix, divided by the leading
    // coefficient, with the sign (-1)^(d(d-1)/2).
    BigInt discriminant() const {
        if (is_zero() || degree() < 2)
            throw std::domain_error("discriminant requires degree >= 2");
        BigInt res = resultant(*this, derivative());
        std::size_t d = degree();
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), leading().get_mpz_t());
        if (r != 0) throw std::logic_error("discriminant: resultant not divisible by lc");
        if ((d * (d - 1) / 2) % 2 == 1) q = -q;
        return q;
    }

    static BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// Determinant of the Sylvester matrix via Bareiss one-step elimination with
// row pivoting. All divisions are exact; sizes here are at most ~40x40.
inline BigInt IntPolynomial::resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    const std::size_t n = p.degree(), m = q.degree();
    if (n == 0) return int_pow(p.leading(), static_cast<unsigned long>(m));
    if (m == 0) return int_pow(q.leading(), static_cast<unsigned long>(n));
    const std::size_t N = n + m;
    std::vector<std::vector<BigInt>> M(N, std::vector<BigInt>(N, BigInt(0)));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) M[r][r + k] = p.coeff(n - k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) M[m + r][r + k] = q.coeff(m - k);

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < N && M[s][k] == 0) ++s;
            if (s == N) return 0;
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                BigInt num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                BigInt quo, rem;
                mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                            prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("resultant: inexact Bareiss division");
                M[i][j] = quo;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

}  // namespace polysep

#endif
