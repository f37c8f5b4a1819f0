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

#ifndef POLYSEP_EISENSTEIN_HPP
#define POLYSEP_EISENSTEIN_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "polysep/family.hpp"
#include "polysep/poly.hpp"

namespace polysep {

enum class EisensteinFailure {
    leading_divisible,
    interior_not_divisible,
    constant_divisible_by_p_squared,
};

inline const char* to_string(EisensteinFailure f) {
    switch (f) {
        case EisensteinFailure::leading_divisible: return "leading-divisible";
        case EisensteinFailure::interior_not_divisible: return "interior-not-divisible";
        case EisensteinFailure::constant_divisible_by_p_squared:
            return "constant-divisible-by-p-squared";
    }
    return "?";
}

struct EisensteinCertificate {
    long prime = 2;
    bool applied_to_reciprocal = false;
    bool passed = false;
    std::optional<EisensteinFailure> failing_condition;
};

// Trial division; the artifact only ever uses p = 2, larger inputs are
// capped at 10^6 by fiat.
inline bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// Classical criterion: prime divides every non-leading coefficient, does
// not divide the leading one, and its square does not divide the constant
// term. Passing certifies irreducibility over the rationals.
inline EisensteinCertificate eisenstein_check(const IntPolynomial& p, long prime) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("eisenstein_check: degree must be >= 1");
    if (prime > 1000000)
        throw std::invalid_argument("eisenstein_check: primes above 10^6 are not supported");
    if (!is_prime_small(prime))
        throw std::invalid_argument("eisenstein_check: " + std::to_string(prime) +
                                    " is not prime");
    EisensteinCertificate cert;
    cert.prime = prime;
    BigInt pz(prime);
    auto divisible = [&](const BigInt& v) {
        return mpz_divisible_p(v.get_mpz_t(), pz.get_mpz_t()) != 0;
    };
    if (divisible(p.leading())) {
        cert.failing_condition = EisensteinFailure::leading_divisible;
        return cert;
    }
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (!divisible(p.coeff(i))) {
            cert.failing_condition = EisensteinFailure::interior_not_divisible;
            return cert;
        }
    }
    BigInt p2 = pz * pz;
    if (mpz_divisible_p(p.constant_term().get_mpz_t(), p2.get_mpz_t())) {
        cert.failing_condition = EisensteinFailure::constant_divisible_by_p_squared;
        return cert;
    }
    cert.passed = true;
    return cert;
}

// The family argument: Eisenstein at 2 applied to the reciprocal. Every
// non-constant coefficient of P(d,a) is even while the leading one,
// 4 c_{d-1} a^d - 2, is 2 mod 4, so the reversed polynomial passes. A
// failed certificate is returned, not thrown: it would falsify the
// construction at that (d, a) and must surface in reports.
inline EisensteinCertificate verify_family_irreducible(const FamilyInstance& inst) {
    EisensteinCertificate cert = eisenstein_check(inst.poly.reciprocal(), 2);
    cert.applied_to_reciprocal = true;
    return cert;
}

}  // namespace polysep

#endif
