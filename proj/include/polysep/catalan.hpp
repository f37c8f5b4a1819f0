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

#ifndef POLYSEP_CATALAN_HPP
#define POLYSEP_CATALAN_HPP

#include <stdexcept>

#include "polysep/bigint.hpp"

namespace polysep {

// i-th Catalan number, closed form binomial(2i, i) / (i + 1). The division
// is exact. Satisfies c_{i+1} = sum_k c_k c_{i-k}, which is what makes the
// family construction collapse in degree.
inline BigInt catalan(long i) {
    if (i < 0) throw std::invalid_argument("catalan: index must be >= 0");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(i),
                 static_cast<unsigned long>(i));
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(i) + 1);
    return r;
}

}  // namespace polysep

#endif
