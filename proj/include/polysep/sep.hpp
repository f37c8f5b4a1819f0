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

#ifndef POLYSEP_SEP_HPP
#define POLYSEP_SEP_HPP

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polysep/errors.hpp"
#include "polysep/family.hpp"
#include "polysep/poly.hpp"
#include "polysep/real.hpp"
#include "polysep/rootfind.hpp"

namespace polysep {

// Minimum pairwise root distance and the lexicographically smallest
// minimizing index pair (roots are already sorted by (re, im)).
inline std::pair<Real, std::pair<std::size_t, std::size_t>> separation(const RootSet& rs) {
    if (!rs.converged) throw std::invalid_argument("separation: RootSet is not converged");
    if (rs.roots.size() < 2)
        throw std::invalid_argument("separation: need at least two roots");
    Real best;
    std::pair<std::size_t, std::size_t> arg{0, 1};
    bool first = true;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
            Real d = abs(rs.roots[i] - rs.roots[j]);
            if (first || d < best) {
                best = d;
                arg = {i, j};
                first = false;
            }
        }
    }
    return {best, arg};
}

// e(P) from sep(P) = H(P)^(-e); reported at double precision, which loses
// nothing for a smooth functional of full-precision inputs.
inline double exponent(const BigInt& H, const Real& sep) {
    if (H < 2) throw std::invalid_argument("exponent: height must be >= 2");
    if (sep.sgn() <= 0 || !sep.is_finite())
        throw std::invalid_argument("exponent: sep must be positive and finite");
    mpfr_prec_t prec = sep.prec() < 64 ? 64 : sep.prec();
    return (-(log(sep) / log(Real::of(H, prec)))).to_double();
}

struct ExponentCertificate {
    RealBracket left, right;  // certified brackets around the close pair
    BigRat sep_upper;         // right.hi - left.lo; sep(P) <= this, exactly
    double e_certified = 0;   // -ln(sep_upper)/ln(H), rigorous lower bound on e(P)
};

// Turns the sign-change brackets into a machine certificate: both close
// roots lie in (left.lo, right.hi), so that gap is an exact upper bound on
// sep(P) and yields a lower bound on e(P) relying only on exact rational
// sign evaluations. When width_target > 0 the brackets are bisected until
// the gap reaches it (best effort: the gap cannot drop below the true
// separation).
inline ExponentCertificate certify_exponent(const FamilyInstance& inst,
                                            const BigRat& width_target = BigRat(0)) {
    ExponentCertificate cert;
    std::tie(cert.left, cert.right) = isolate_close_pair(inst);
    if (width_target > 0) {
        for (int step = 0; step < 512 && cert.right.hi - cert.left.lo > width_target; ++step) {
            BigRat gap = cert.right.hi - cert.left.lo;
            BigRat wl = cert.left.width(), wr = cert.right.width();
            if (wl + wr <= gap / int_pow(BigInt(2), 40)) break;  // gap is now the true sep
            RealBracket& wider = wl >= wr ? cert.left : cert.right;
            wider = bisect_bracket(inst.poly, wider, wider.width() / 2);
        }
    }
    cert.sep_upper = cert.right.hi - cert.left.lo;
    BigInt H = inst.poly.height();
    cert.e_certified =
        (-(log(Real::of(cert.sep_upper, 192)) / log(Real::of(H, 192)))).to_double();
    return cert;
}

struct ReciprocalChecks {
    bool pair_is_inverse = false;     // min pair of Q matches {1/alpha, 1/beta}
    double sep_identity_ratio = 0;    // sep(Q)*|alpha beta| / sep(P), -> 1
    double inv_root_bound_ratio = 0;  // max|1/root| / (2 c_{d-2} a^(d-1)), -> 1
};

struct SepReport {
    long d = 0;
    long a = 0;
    BigInt H;
    Real sep;
    std::pair<std::size_t, std::size_t> pair{0, 0};
    double e = 0;
    BigRat e_pred;
    Real sep_pred;
    double ratio = 0;
    std::optional<double> e_certified;
    bool mahler_ok = false;
    bool disc_nonzero = false;
    bool monic_variant = false;
    long prec_bits = 0;
    std::optional<ReciprocalChecks> reciprocal;
};

// Full pipeline for one instance: adaptive roots, separation, exponent,
// best-effort certificate, ratio against the predicted leading order, and
// the e <= d-1 bound of Mahler.
inline SepReport analyze(const FamilyInstance& inst) {
    SepReport rep;
    rep.d = inst.d;
    rep.a = inst.a;
    rep.H = inst.poly.height();
    rep.disc_nonzero = (inst.poly.discriminant() != 0);
    rep.e_pred = inst.prediction.exp_pred;
    rep.sep_pred = inst.prediction.sep_pred;
    RootSet rs = adaptive_roots(inst.poly, inst.prediction.sep_pred);
    rep.prec_bits = rs.prec_bits;
    auto [sep, pair] = separation(rs);
    rep.sep = sep;
    rep.pair = pair;
    rep.e = exponent(rep.H, sep);
    rep.ratio = (sep / rep.sep_pred).to_double();
    rep.mahler_ok = rep.e <= static_cast<double>(inst.d - 1);
    try {
        rep.e_certified = certify_exponent(inst).e_certified;
    } catch (const ThresholdError&) {
        // below the asymptotic regime: measured values stand, no certificate
    }
    return rep;
}

// Report for the monic variant Q = reciprocal(P). H(Q) = H(P), the roots
// are the inverses, and |1/a - 1/b| = |a - b| / |ab| maps the close pair of
// P onto a close pair of Q at scale 1/x0^2. The proof identities are
// measured and recorded alongside the report; the certificate transfers by
// mapping the exact brackets through y = 1/x and re-checking signs exactly.
inline SepReport analyze_reciprocal(const FamilyInstance& inst) {
    const IntPolynomial Q = inst.poly.reciprocal();
    SepReport rep;
    rep.d = inst.d;
    rep.a = inst.a;
    rep.monic_variant = true;
    rep.H = Q.height();
    rep.disc_nonzero = (Q.discriminant() != 0);
    rep.e_pred = inst.prediction.exp_pred_monic;
    BigInt c = catalan(inst.d - 2);
    BigInt inv_scale = 4 * c * c * int_pow(inst.a, static_cast<unsigned long>(2 * inst.d - 2));
    rep.sep_pred = inst.prediction.sep_pred * Real::of(inv_scale, 128);

    RootSet rsq = adaptive_roots(Q, rep.sep_pred);
    rep.prec_bits = rsq.prec_bits;
    auto [sepq, pairq] = separation(rsq);
    rep.sep = sepq;
    rep.pair = pairq;
    rep.e = exponent(rep.H, sepq);
    rep.ratio = (sepq / rep.sep_pred).to_double();
    rep.mahler_ok = rep.e <= static_cast<double>(inst.d - 1);

    RootSet rsp = adaptive_roots(inst.poly, inst.prediction.sep_pred);
    auto [sepp, pairp] = separation(rsp);
    const Complex& alpha = rsp.roots[pairp.first];
    const Complex& beta = rsp.roots[pairp.second];
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(rsp.prec_bits);
    const Complex one(Real::of(1L, prec), Real(prec));
    Complex inv_a = one / alpha, inv_b = one / beta;

    ReciprocalChecks checks;
    checks.sep_identity_ratio = (sepq * abs(alpha * beta) / sepp).to_double();
    auto near = [](const Complex& u, const Complex& v) {
        return abs(u - v) <= abs(v) * Real::of(1e-6, 64);
    };
    const Complex& q1 = rsq.roots[pairq.first];
    const Complex& q2 = rsq.roots[pairq.second];
    checks.pair_is_inverse =
        (near(q1, inv_a) && near(q2, inv_b)) || (near(q1, inv_b) && near(q2, inv_a));
    Real inv_mag = abs(inv_a) > abs(inv_b) ? abs(inv_a) : abs(inv_b);
    BigInt bound_scale = 2 * c * int_pow(inst.a, static_cast<unsigned long>(inst.d - 1));
    checks.inv_root_bound_ratio = (inv_mag / Real::of(bound_scale, prec)).to_double();
    rep.reciprocal = checks;

    try {
        auto [bl, br] = isolate_close_pair(inst);
        auto invert = [&](const RealBracket& b) {
            RealBracket m;
            m.lo = 1 / b.hi;
            m.hi = 1 / b.lo;
            m.sign_lo = Q.sign_at(m.lo);
            m.sign_hi = Q.sign_at(m.hi);
            return m;
        };
        RealBracket mleft = invert(br);   // 1/x reverses order on the negative axis
        RealBracket mright = invert(bl);
        if (mleft.sign_lo * mleft.sign_hi < 0 && mright.sign_lo * mright.sign_hi < 0) {
            BigRat sep_upper = mright.hi - mleft.lo;
            rep.e_certified =
                (-(log(Real::of(sep_upper, 192)) / log(Real::of(rep.H, 192)))).to_double();
        }
    } catch (const ThresholdError&) {
    }
    return rep;
}

struct ScanRow {
    long d = 0;
    long a = 0;
    std::string status;  // ok | nocert | noconv | error
    std::string H_str;
    std::string sep_str;
    double e = 0;
    std::string e_pred_str;
    double ratio = 0;
    std::optional<double> e_certified;
    long prec_bits = 0;
    long elapsed_ms = 0;
    double ln_a = 0;
    double ln_sep = 0;
    bool has_values = false;
};

namespace detail {

inline ScanRow scan_one(long d, long a) {
    ScanRow row;
    row.d = d;
    row.a = a;
    row.ln_a = std::log(static_cast<double>(a));
    if (d >= 3)
        row.e_pred_str = rat_string(make_rat(BigInt(2 * d * d - d - 2), BigInt(4 * (d - 1))));
    auto t0 = std::chrono::steady_clock::now();
    try {
        FamilyInstance inst = make_family_instance(d, a);
        SepReport rep = analyze(inst);
        row.H_str = to_string(rep.H);
        row.sep_str = rep.sep.str();
        row.e = rep.e;
        row.ratio = rep.ratio;
        row.e_certified = rep.e_certified;
        row.prec_bits = rep.prec_bits;
        row.ln_sep = log(rep.sep).to_double();
        row.has_values = true;
        row.status = rep.e_certified ? "ok" : "nocert";
    } catch (const NonConvergenceError&) {
        row.status = "noconv";
    } catch (const ThresholdError&) {
        row.status = "threshold";
    } catch (const std::invalid_argument&) {
        row.status = "error";
    }
    auto t1 = std::chrono::steady_clock::now();
    row.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

}  // namespace detail

// One row per a, rows ordered by a. Rows are independent and may be
// evaluated in parallel; failures are recorded in-row so wide sweeps
// complete.
inline std::vector<ScanRow> scan(long d, std::vector<long> a_values, unsigned jobs = 1) {
    if (a_values.empty()) throw std::invalid_argument("scan: a_values must be nonempty");
    for (long a : a_values)
        if (a < 1) throw std::invalid_argument("scan: every a must be >= 1");
    std::sort(a_values.begin(), a_values.end());
    std::vector<ScanRow> rows(a_values.size());
    if (jobs <= 1 || a_values.size() == 1) {
        for (std::size_t i = 0; i < a_values.size(); ++i)
            rows[i] = detail::scan_one(d, a_values[i]);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= a_values.size()) return;
            rows[i] = detail::scan_one(d, a_values[i]);
        }
    };
    std::vector<std::thread> pool;
    unsigned n = jobs < a_values.size() ? jobs : static_cast<unsigned>(a_values.size());
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

inline std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// CSV schema: d,a,status,H,sep,e,e_pred,ratio,e_certified,prec_bits,elapsed_ms.
// H and sep as decimal strings, e/ratio/e_certified with 12 significant
// digits, e_pred as "p/q". with_timing=false pins elapsed_ms to 0 so runs
// are byte-identical.
inline void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& os,
                           bool with_timing = true) {
    os << "d,a,status,H,sep,e,e_pred,ratio,e_certified,prec_bits,elapsed_ms\n";
    for (const ScanRow& r : rows) {
        os << r.d << ',' << r.a << ',' << r.status << ',';
        if (r.has_values)
            os << r.H_str << ',' << r.sep_str << ',' << format_g12(r.e) << ','
               << r.e_pred_str << ',' << format_g12(r.ratio) << ','
               << (r.e_certified ? format_g12(*r.e_certified) : std::string());
        else
            os << ",,," << r.e_pred_str << ",,";
        os << ',' << r.prec_bits << ',' << (with_timing ? r.elapsed_ms : 0L) << '\n';
    }
}

// Least-squares slope of ln(sep) against ln(a); the model is exact to
// leading order, so plain unweighted fitting is all that is warranted.
inline double slope_fit(const std::vector<ScanRow>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (const ScanRow& r : rows)
        if (r.has_values) pts.emplace_back(r.ln_a, r.ln_sep);
    if (pts.size() < 2)
        throw std::invalid_argument("slope_fit: need at least two rows with valid sep");
    double mx = 0, my = 0;
    for (auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) throw std::invalid_argument("slope_fit: zero variance in ln a");
    return sxy / sxx;
}

}  // namespace polysep

#endif
