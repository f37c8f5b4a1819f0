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

#ifndef POLYSEP_VERIFY_HPP
#define POLYSEP_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polysep/eisenstein.hpp"
#include "polysep/errors.hpp"
#include "polysep/family.hpp"
#include "polysep/rootfind.hpp"
#include "polysep/sep.hpp"

namespace polysep {

struct VerifyCheck {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string note;  // failing cases or skip reason

    void fail(const std::string& what) {
        passed = false;
        if (!note.empty()) note += "; ";
        note += what;
    }
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    std::optional<EisensteinCertificate> eisenstein;  // aggregated family certificate
    bool all_passed = true;
};

// The executable invariant suite behind `polysep verify`: construction
// identities, closed-form small-degree regressions, Catalan recurrence,
// exponent formula, Eisenstein certificates, nonzero discriminants, exact
// close-pair brackets, and (when a_max allows) measured separation ratios.
inline VerifyResult run_verify(long d_max, long a_max) {
    if (d_max < 3) throw std::invalid_argument("verify: d_max must be >= 3");
    if (a_max < 1) throw std::invalid_argument("verify: a_max must be >= 1");
    VerifyResult out;

    {
        VerifyCheck c;
        c.name = "construction-identities";
        for (long d = 3; d <= d_max; ++d) {
            for (long a = 1; a <= a_max; ++a) {
                ++c.cases;
                std::string tag = "(d=" + std::to_string(d) + ",a=" + std::to_string(a) + ")";
                IntPolynomial pe, pc;
                try {
                    pe = construct_expanded(d, a);
                    pc = construct_compact(d, a);
                } catch (const std::logic_error& ex) {
                    c.fail(tag + " " + ex.what());
                    continue;
                }
                if (pe != pc) c.fail(tag + " expanded != compact");
                if (pc.degree() != static_cast<std::size_t>(d)) c.fail(tag + " degree != d");
                if (pc.constant_term() != 1) c.fail(tag + " constant term != 1");
                BigInt lc = 4 * catalan(d - 1) * int_pow(a, static_cast<unsigned long>(d)) - 2;
                if (pc.leading() != lc) c.fail(tag + " leading coefficient mismatch");
                BigInt h = pc.height();
                if (h != height_formula(d, a)) c.fail(tag + " height formula mismatch");
                if (abs(pc.coeff(2)) != h) c.fail(tag + " height not attained at x^2");
            }
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "small-degree-families";
        long amax = std::min<long>(a_max, 10);
        for (long a = 1; a <= amax; ++a) {
            BigInt A(a);
            std::vector<std::vector<BigInt>> closed = {
                {1, 4 * A * A, 4 * int_pow(A, 4) + 4 * A, 8 * int_pow(A, 3) - 2},
                {1, 8 * int_pow(A, 3), 16 * int_pow(A, 6) + 4 * A * A,
                 16 * int_pow(A, 5) + 4 * A, 20 * int_pow(A, 4) - 2},
                {1, 20 * int_pow(A, 4), 100 * int_pow(A, 8) + 8 * int_pow(A, 3),
                 80 * int_pow(A, 7) + 4 * A * A, 56 * int_pow(A, 6) + 4 * A,
                 56 * int_pow(A, 5) - 2}};
            for (long d = 3; d <= std::min<long>(d_max, 5); ++d) {
                ++c.cases;
                if (construct_compact(d, a) !=
                    IntPolynomial(std::vector<BigInt>(closed[static_cast<std::size_t>(d - 3)])))
                    c.fail("(d=" + std::to_string(d) + ",a=" + std::to_string(a) + ")");
            }
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "catalan-recurrence";
        for (long i = 0; i + 1 <= 30; ++i) {
            ++c.cases;
            BigInt s = 0;
            for (long k = 0; k <= i; ++k) s += catalan(k) * catalan(i - k);
            if (s != catalan(i + 1)) c.fail("i=" + std::to_string(i));
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "exponent-formula";
        for (long d = 3; d <= 100; ++d) {
            ++c.cases;
            BigRat lhs = make_rat(BigInt(2 * d * d - d - 2), BigInt(4 * (d - 1)));
            BigRat rhs = make_rat(BigInt(d), BigInt(2)) + make_rat(BigInt(d - 2), BigInt(4 * (d - 1)));
            if (lhs != rhs) c.fail("d=" + std::to_string(d));
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "eisenstein";
        EisensteinCertificate agg;
        agg.prime = 2;
        agg.applied_to_reciprocal = true;
        agg.passed = true;
        for (long d = 3; d <= d_max; ++d) {
            for (long a = 1; a <= a_max; ++a) {
                ++c.cases;
                EisensteinCertificate cert =
                    verify_family_irreducible(make_family_instance(d, a));
                if (!cert.passed) {
                    agg = cert;
                    c.fail("(d=" + std::to_string(d) + ",a=" + std::to_string(a) + ")");
                }
            }
        }
        out.eisenstein = agg;
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "discriminant-nonzero";
        for (long d = 3; d <= std::min<long>(d_max, 10); ++d) {
            for (long a = 1; a <= std::min<long>(a_max, 50); ++a) {
                ++c.cases;
                if (construct_compact(d, a).discriminant() == 0)
                    c.fail("(d=" + std::to_string(d) + ",a=" + std::to_string(a) + ")");
            }
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "close-pair-brackets";
        for (long d = 3; d <= std::min<long>(d_max, 8); ++d) {
            long a = std::min<long>(a_max, 30);
            if (a < a_min_threshold(d)) {
                c.note = "skipped: a_max below bracket threshold";
                continue;
            }
            ++c.cases;
            std::string tag = "(d=" + std::to_string(d) + ",a=" + std::to_string(a) + ")";
            try {
                FamilyInstance inst = make_family_instance(d, a);
                auto [left, right] = isolate_close_pair(inst);
                if (!(left.hi < right.lo)) c.fail(tag + " brackets not disjoint");
                if (inst.poly.sign_at(left.lo) != left.sign_lo ||
                    inst.poly.sign_at(left.hi) != left.sign_hi ||
                    inst.poly.sign_at(right.lo) != right.sign_lo ||
                    inst.poly.sign_at(right.hi) != right.sign_hi)
                    c.fail(tag + " endpoint sign re-evaluation mismatch");
            } catch (const ThresholdError& ex) {
                c.fail(tag + " " + ex.what());
            }
        }
        out.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "separation-ratio";
        if (a_max < 100) {
            c.note = "skipped: requires a_max >= 100";
        } else {
            for (long d = 3; d <= std::min<long>(d_max, 8); ++d) {
                ++c.cases;
                std::string tag = "(d=" + std::to_string(d) + ",a=100)";
                try {
                    SepReport rep = analyze(make_family_instance(d, 100));
                    if (!(rep.ratio >= 0.99 && rep.ratio <= 1.01))
                        c.fail(tag + " ratio=" + format_g12(rep.ratio));
                    if (!rep.mahler_ok) c.fail(tag + " Mahler bound violated");
                    if (rep.e_certified && !(*rep.e_certified <= rep.e + 1e-9))
                        c.fail(tag + " certificate exceeds measured e");
                } catch (const std::exception& ex) {
                    c.fail(tag + " " + ex.what());
                }
            }
        }
        out.checks.push_back(std::move(c));
    }

    for (const VerifyCheck& c : out.checks) out.all_passed = out.all_passed && c.passed;
    return out;
}

}  // namespace polysep

#endif
