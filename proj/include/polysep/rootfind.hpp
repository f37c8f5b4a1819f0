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

#ifndef POLYSEP_ROOTFIND_HPP
#define POLYSEP_ROOTFIND_HPP

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysep/errors.hpp"
#include "polysep/family.hpp"
#include "polysep/poly.hpp"
#include "polysep/real.hpp"

namespace polysep {

struct RootSet {
    std::vector<Complex> roots;     // sorted by (re, im)
    std::vector<Real> error_radii;  // d * |p/p'| inclusion bound per root
    long prec_bits = 0;
    bool converged = false;
};

// Classical inclusion bound: at least one root of p lies within
// degree * |p(z)/p'(z)| of z. Infinite sentinel when p' vanishes at working
// precision, which forces the caller to escalate.
inline Real error_radius(const IntPolynomial& p, const Complex& z, mpfr_prec_t prec_bits) {
    Complex dpz = p.derivative().eval_complex(z, prec_bits);
    if (dpz.is_zero()) return Real::inf(prec_bits);
    Complex pz = p.eval_complex(z, prec_bits);
    return abs(pz / dpz) * static_cast<long>(p.degree());
}

namespace detail {

inline void sort_by_position(std::vector<Complex>& roots, std::vector<Real>& radii) {
    std::vector<std::size_t> idx(roots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        if (roots[i].re != roots[j].re) return roots[i].re < roots[j].re;
        return roots[i].im < roots[j].im;
    });
    std::vector<Complex> r2;
    std::vector<Real> e2;
    r2.reserve(roots.size());
    e2.reserve(roots.size());
    for (std::size_t i : idx) {
        r2.push_back(std::move(roots[i]));
        e2.push_back(std::move(radii[i]));
    }
    roots = std::move(r2);
    radii = std::move(e2);
}

inline bool disks_disjoint(const std::vector<Complex>& roots, const std::vector<Real>& radii) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!radii[i].is_finite()) return false;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            Real dist = abs(roots[i] - roots[j]);
            if (dist <= (radii[i] + radii[j]) * 3L) return false;
        }
    }
    return true;
}

}  // namespace detail

// Simultaneous Aberth-Ehrlich iteration at fixed working precision.
// Deterministic: starts from equally spaced points on the Cauchy-bound
// circle R = 1 + H/|lc| rotated by 0.4 rad, updates in place (Gauss-Seidel
// ordering), always rounds to nearest.
//
// A root approximation is treated as settled once |p(z)| drops below the
// Horner error majorant scaled to the working precision; beyond that point
// the computed value is rounding noise and no correction is meaningful. The
// sweep stops when every root is settled or its correction is below
// (1+|z|) * 2^(-prec+8). Whether the result deserves `converged` is decided
// afterwards from the error radii: all finite and the disks (root,
// 3*radius) pairwise disjoint. An unresolved close cluster fails that test
// and escalates instead of spinning.
inline RootSet aberth_all_roots(const IntPolynomial& p, mpfr_prec_t prec_bits) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("aberth_all_roots: degree must be >= 1");
    if (prec_bits < 32) throw std::invalid_argument("aberth_all_roots: prec_bits >= 32 required");
    const std::size_t deg = p.degree();
    const long prec = prec_bits;

    RootSet rs;
    rs.prec_bits = prec;

    if (deg == 1) {
        BigRat r = make_rat(-p.coeff(0), p.coeff(1));
        rs.roots.emplace_back(Real::of(r, prec), Real(prec));
        rs.error_radii.emplace_back(Real(prec));
        rs.converged = true;
        return rs;
    }

    if (p.discriminant() == 0)
        throw std::invalid_argument("aberth_all_roots: input must be square-free");

    const IntPolynomial dp = p.derivative();
    const Real one = Real::of(1L, prec);
    Real radius = one + Real::of(p.height(), prec) / abs(Real::of(p.leading(), prec));
    Real two_pi = ldexp2(Real::pi(prec), 1);

    std::vector<Complex> z;
    z.reserve(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        Real theta = two_pi * static_cast<long>(k) / static_cast<long>(deg) +
                     Real::of(0.4, prec);
        z.emplace_back(radius * cos(theta), radius * sin(theta));
    }

    const long maxit = 200 + 24 * static_cast<long>(deg) + 4 * prec;
    const Real stop_tol = ldexp2(one, -prec + 8);
    bool iter_ok = false;

    for (long it = 0; it < maxit && !iter_ok; ++it) {
        bool all_done = true;
        for (std::size_t i = 0; i < deg; ++i) {
            auto [pz, majorant] = p.eval_complex_with_bound(z[i], prec);
            if (abs(pz) <= ldexp2(majorant, -prec + 6)) continue;  // at the noise floor
            Complex dpz = dp.eval_complex(z[i], prec);
            if (dpz.is_zero()) {
                z[i].re += radius * ldexp2(one, -5 - static_cast<long>(i % 16));
                all_done = false;
                continue;
            }
            Complex newton = pz / dpz;
            Complex repulse(prec);
            bool collided = false;
            for (std::size_t j = 0; j < deg; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff.is_zero()) {
                    collided = true;
                    break;
                }
                repulse = repulse + Complex(one, Real(prec)) / diff;
            }
            if (collided) {
                z[i].re += radius * ldexp2(one, -6 - static_cast<long>(i % 16));
                all_done = false;
                continue;
            }
            Complex denom = Complex(one, Real(prec)) - newton * repulse;
            Complex delta = denom.is_zero() ? newton : newton / denom;
            z[i] = z[i] - delta;
            if (abs(delta) > (one + abs(z[i])) * stop_tol) all_done = false;
        }
        if (all_done) iter_ok = true;
    }

    rs.roots = std::move(z);
    rs.error_radii.reserve(deg);
    for (const Complex& r : rs.roots) rs.error_radii.push_back(error_radius(p, r, prec));
    detail::sort_by_position(rs.roots, rs.error_radii);
    rs.converged = iter_ok && detail::disks_disjoint(rs.roots, rs.error_radii);
    return rs;
}

// Precision policy wrapped around the fixed-precision solve. Starts at
// 64 + 2 ceil(log2 H) + 2 ceil(-log2 hint) bits and doubles until the set
// converges with every error radius below hint/10^6, at most 4 escalations.
// POLYSEP_PREC_CAP (bits) caps the escalation for CI runs.
inline RootSet adaptive_roots(const IntPolynomial& p, const Real& hint) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("adaptive_roots: degree must be >= 1");
    if (hint.sgn() <= 0 || !hint.is_finite())
        throw std::invalid_argument("adaptive_roots: hint must be positive and finite");

    long prec = 64 + 2 * static_cast<long>(bit_length(p.height()));
    if (hint < 1L) prec += 2 * static_cast<long>(1 - hint.exp2());
    long cap = 0;
    if (const char* env = std::getenv("POLYSEP_PREC_CAP")) cap = std::atol(env);
    if (cap >= 64 && prec > cap) prec = cap;

    Real threshold = hint / 1000000L;
    std::string diag;
    for (int attempt = 0; attempt < 5; ++attempt) {
        RootSet rs = aberth_all_roots(p, prec);
        Real max_radius(64);
        for (const Real& r : rs.error_radii)
            if (r > max_radius) max_radius = r;
        if (rs.converged && max_radius < threshold) return rs;
        diag += " [prec=" + std::to_string(prec) +
                " converged=" + (rs.converged ? "yes" : "no") +
                " max_radius=" + max_radius.str(6) + "]";
        long next = prec * 2;
        if (cap >= 64 && next > cap) next = cap;
        if (next == prec) break;
        prec = next;
    }
    throw NonConvergenceError("adaptive_roots: precision escalation exhausted;" + diag);
}

// Interval with an exact-arithmetic sign change at its endpoints,
// certifying a contained real root. Degenerate [m, m] with signs 0 marks a
// rational root hit exactly.
struct RealBracket {
    BigRat lo, hi;
    int sign_lo = 0, sign_hi = 0;
    bool exact_root = false;
    BigRat width() const { return hi - lo; }
};

// Sign-preserving bisection with exact rational evaluation.
inline RealBracket bisect_bracket(const IntPolynomial& p, const RealBracket& b,
                                  const BigRat& target_width) {
    if (b.exact_root) return b;
    RealBracket r = b;
    while (r.hi - r.lo > target_width) {
        BigRat m = (r.lo + r.hi) / 2;
        int s = p.sign_at(m);
        if (s == 0) return {m, m, 0, 0, true};
        if (s == r.sign_lo)
            r.lo = m;
        else
            r.hi = m;
    }
    return r;
}

namespace detail {

// Rational proxy for a positive irrational offset: the 128-bit value
// rounded outward/inward to a dyadic with ~140 significant bits.
inline BigRat dyadic_proxy(const Real& t, bool round_up) {
    long k = 140;
    mpfr_exp_t e = t.exp2();
    if (e < 1) k = 141 - e;
    Real scaled = ldexp2(t, k);
    BigInt n = round_up ? scaled.ceil_int() : scaled.floor_int();
    return make_rat(n, int_pow(BigInt(2), static_cast<unsigned long>(k)));
}

}  // namespace detail

// Smallest a for which the asymptotic sign pattern is expected; raise per
// degree here if a pattern failure is ever observed below it.
inline long a_min_threshold(long d) {
    (void)d;
    return 10;
}

// Certified isolation of the two close real roots by the four exact sign
// evaluations P(x0 -+ (delta0 +- eps) h) with h = a^(-d^2+d/2+1). x0 is the
// bisection-refined root of 1+g (to width delta0*h/64); the offsets are
// dyadic proxies of the irrational test values. Soundness rests entirely on
// the exact signs; the proxies only affect the success margin. On a failed
// pattern the operation retries once with eps = 0.01*delta0 before
// reporting a threshold error with the observed signs.
inline std::pair<RealBracket, RealBracket> isolate_close_pair(const FamilyInstance& inst,
                                                              double epsilon_frac = 0.1) {
    if (!(epsilon_frac > 0.0 && epsilon_frac < 1.0))
        throw std::invalid_argument("isolate_close_pair: epsilon_frac must be in (0,1)");
    if (inst.a < a_min_threshold(inst.d))
        throw ThresholdError("isolate_close_pair: a=" + std::to_string(inst.a) +
                             " is below the a_min(" + std::to_string(inst.d) +
                             ")=" + std::to_string(a_min_threshold(inst.d)) + " threshold");

    const mpfr_prec_t prec = 128;
    const Real delta0 = inst.prediction.delta0.at_prec(prec);
    const Real hval = inst.prediction.h.value(inst.a, prec);
    const BigRat refine_width = (delta0 * hval / 64L).to_rational();
    const RationalInterval x0iv = refine_x0(inst.d, inst.a, refine_width);
    const BigRat x0m = x0iv.mid();

    std::string observed;
    for (double frac : {epsilon_frac, 0.01}) {
        Real eps = delta0 * Real::of(frac, prec);
        BigRat t_out = detail::dyadic_proxy((delta0 + eps) * hval, true);
        BigRat t_in = detail::dyadic_proxy((delta0 - eps) * hval, false);
        if (!(t_in > 0 && t_out > t_in)) continue;
        int s1 = inst.poly.sign_at(x0m - t_out);
        int s2 = inst.poly.sign_at(x0m - t_in);
        int s3 = inst.poly.sign_at(x0m + t_in);
        int s4 = inst.poly.sign_at(x0m + t_out);
        if (s1 > 0 && s2 < 0 && s3 < 0 && s4 > 0) {
            RealBracket left{x0m - t_out, x0m - t_in, +1, -1, false};
            RealBracket right{x0m + t_in, x0m + t_out, -1, +1, false};
            return {left, right};
        }
        observed += " eps_frac=" + std::to_string(frac) + " signs=(" + std::to_string(s1) +
                    "," + std::to_string(s2) + "," + std::to_string(s3) + "," +
                    std::to_string(s4) + ")";
        if (frac == 0.01) break;
    }
    throw ThresholdError("isolate_close_pair: sign pattern not found at d=" +
                         std::to_string(inst.d) + ", a=" + std::to_string(inst.a) +
                         " (a below the asymptotic regime);" + observed);
}

}  // namespace polysep

#endif
