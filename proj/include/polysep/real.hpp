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

#ifndef POLYSEP_REAL_HPP
#define POLYSEP_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "polysep/bigint.hpp"

namespace polysep {

// Thin RAII wrapper over mpfr_t. Precision is tracked in bits per value;
// binary operations produce results at the wider of the two operand
// precisions, rounding to nearest. Everything is deterministic.
class Real {
  public:
    Real() { init(64); }
    explicit Real(mpfr_prec_t prec_bits) { init(prec_bits); }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const BigInt& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const BigRat& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real inf(mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_inf(r.v_, 1);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // Value rounded to the given working precision.
    Real at_prec(mpfr_prec_t prec_bits) const {
        Real r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }

    // Exponent e with |x| in [2^(e-1), 2^e); only meaningful for nonzero finite x.
    mpfr_exp_t exp2() const { return mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Every finite mpfr value is a dyadic rational; this conversion is exact.
    BigRat to_rational() const {
        BigRat q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

    BigInt floor_int() const {
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }
    BigInt ceil_int() const {
        BigInt z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
        return z;
    }

    std::string str(int significant_digits = 0) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        int digits = significant_digits > 0
                         ? significant_digits
                         : static_cast<int>(static_cast<double>(prec()) * 0.30103) + 3;
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

    friend Real operator*(const Real& a, long k) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long k) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long k) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long k) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator-(long k, const Real& a) {
        Real r(a.prec());
        mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long k, const Real& a) {
        Real r(a.prec());
        mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend bool operator<(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) < 0; }
    friend bool operator>(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) > 0; }
    friend bool operator<=(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) <= 0; }
    friend bool operator>=(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) >= 0; }

    // Exact comparison against a rational, no rounding involved.
    int cmp(const BigRat& q) const { return mpfr_cmp_q(v_, q.get_mpq_t()); }

    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& a) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log(const Real& a) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log2(const Real& a) {
        Real r(a.prec());
        mpfr_log2(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // a * 2^k, exact.
    friend Real ldexp2(const Real& a, long k) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real sin(const Real& a) {
        Real r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cos(const Real& a) {
        Real r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

  private:
    using mpfr_binfn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

    void init(mpfr_prec_t prec_bits) {
        mpfr_init2(v_, prec_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec_bits);
        mpfr_set_zero(v_, 1);
    }

    static Real binop(const Real& a, const Real& b, mpfr_binfn fn) {
        Real r(std::max(a.prec(), b.prec()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

// Complex value over Real. Only the handful of operations the root finder
// needs; division uses the textbook formula (mpfr's exponent range makes
// overflow a non-issue).
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }

    friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
    friend Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace polysep

#endif
