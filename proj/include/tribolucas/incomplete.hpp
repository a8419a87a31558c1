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

#ifndef TRIBOLUCAS_INCOMPLETE_HPP
#define TRIBOLUCAS_INCOMPLETE_HPP

#include <cstdint>
#include <vector>

#include "tribolucas/bigint.hpp"
#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// Rows of trinomial coefficients: row n holds the 2n+1 coefficients of
/// (1 + x + x^2)^n, built by the three-term addition rule. Each row is
/// symmetric and sums to 3^n.
class TrinomialTable {
   public:
    explicit TrinomialTable(std::int64_t max_row);

    std::int64_t max_row() const noexcept { return static_cast<std::int64_t>(rows_.size()) - 1; }

    /// Entry (n, j); zero outside columns 0..2n. n must be a built row.
    const BigInt& at(std::int64_t n, std::int64_t j) const;

    const std::vector<BigInt>& row(std::int64_t n) const;

   private:
    std::vector<std::vector<BigInt>> rows_;
};

/// Coefficient of x^j in (1 + x + x^2)^n; zero for j < 0 or j > 2n.
BigInt trinomial(std::int64_t n, std::int64_t j);

/// Binomial-style closed form of the tribonacci polynomial, n >= 1:
/// sum over j of trinomial(n-j-1, j) x^{2n-3j-2}.
IntPoly tribonacci_poly_closed(std::int64_t n);

/// Closed form of the fibonacci polynomial, n >= 1:
/// sum over j <= (n-1)/2 of C(n-j-1, j) x^{n-2j-1}.
IntPoly fibonacci_poly_closed(std::int64_t n);

/// Partial sums of the explicit expansion of the tribonacci-lucas
/// polynomial, outer index truncated at s with 0 <= s <= n/2:
///   sum_{i<=s} sum_{j<=i} (n/(n-i-j)) C(i,j) C(n-i-j, i) x^{2n-3(i+j)}.
/// Terms with n-i-j <= 0 or negative exponent are skipped (they pair a
/// vanishing binomial with an undefined ratio and contribute nothing);
/// every kept term's ratio is divided exactly and IntegralityError fires
/// if it ever is not. At s = floor(n/2) the full polynomial K_n(x) comes
/// back.
IntPoly incomplete_tl_poly(std::int64_t n, std::int64_t s);

/// The number variant (the same sum without x); equals
/// incomplete_tl_poly(n, s) at x = 1, and K_n at s = floor(n/2).
BigInt incomplete_tl_number(std::int64_t n, std::int64_t s);

}  // namespace tribolucas

#endif
