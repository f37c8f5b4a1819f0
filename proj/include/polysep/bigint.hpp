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

#ifndef POLYSEP_BIGINT_HPP
#define POLYSEP_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace polysep {

// Arbitrary-size integers and rationals. mpq_class keeps values canonical
// (lowest terms, positive denominator) through arithmetic; only raw
// num/den construction needs an explicit canonicalize().
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt int_pow(long base, unsigned long e) { return int_pow(BigInt(base), e); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// Number of bits of |z|, i.e. floor(log2|z|) + 1 for nonzero z.
inline unsigned long bit_length(const BigInt& z) {
    if (z == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

// "p/q" form, used for exact exponents in reports.
inline std::string rat_string(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace polysep

#endif
