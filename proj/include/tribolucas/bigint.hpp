/*
   Copyright 2026 The tribolucas authors

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

#ifndef TRIBOLUCAS_BIGINT_HPP
#define TRIBOLUCAS_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tribolucas {

/// Arbitrary-precision signed integer. GMP keeps zero canonical (no
/// negative zero) and add/sub/mul never overflow.
using BigInt = mpz_class;

/// Thrown when an exact division that must be exact is not.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// value / divisor, throwing IntegralityError unless the division is exact.
BigInt divide_exact(const BigInt& value, const BigInt& divisor);

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace tribolucas

#endif
