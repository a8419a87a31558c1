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

#include "tribolucas/incomplete.hpp"

#include <stdexcept>

namespace tribolucas {

namespace {

std::vector<BigInt> next_trinomial_row(const std::vector<BigInt>& row) {
    // entry j of the next row = sum of entries j, j-1, j-2 of this one
    std::vector<BigInt> next(row.size() + 2);
    for (std::size_t j = 0; j < next.size(); ++j) {
        BigInt v = 0;
        if (j < row.size()) v += row[j];
        if (j >= 1 && j - 1 < row.size()) v += row[j - 1];
        if (j >= 2 && j - 2 < row.size()) v += row[j - 2];
        next[j] = v;
    }
    return next;
}

}  // namespace

TrinomialTable::TrinomialTable(std::int64_t max_row) {
    if (max_row < 0) throw std::domain_error("trinomial rows start at 0");
    rows_.reserve(static_cast<std::size_t>(max_row) + 1);
    rows_.push_back({BigInt(1)});
    for (std::int64_t n = 1; n <= max_row; ++n) rows_.push_back(next_trinomial_row(rows_.back()));
}

const std::vector<BigInt>& TrinomialTable::row(std::int64_t n) const {
    if (n < 0 || n > max_row()) throw std::out_of_range("trinomial row not built");
    return rows_[static_cast<std::size_t>(n)];
}

const BigInt& TrinomialTable::at(std::int64_t n, std::int64_t j) const {
    static const BigInt kZero = 0;
    const std::vector<BigInt>& r = row(n);
    if (j < 0 || j >= static_cast<std::int64_t>(r.size())) return kZero;
    return r[static_cast<std::size_t>(j)];
}

BigInt trinomial(std::int64_t n, std::int64_t j) {
    if (n < 0) throw std::domain_error("trinomial requires n >= 0");
    if (j < 0 || j > 2 * n) return BigInt(0);
    std::vector<BigInt> row = {BigInt(1)};
    for (std::int64_t i = 0; i < n; ++i) row = next_trinomial_row(row);
    return row[static_cast<std::size_t>(j)];
}

IntPoly tribonacci_poly_closed(std::int64_t n) {
    if (n < 1) throw std::domain_error("tribonacci_poly_closed requires n >= 1");
    const TrinomialTable table(n - 1);
    IntPoly out;
    for (std::int64_t j = 0; n - j - 1 >= 0 && 2 * n - 3 * j - 2 >= 0; ++j)
        out += IntPoly::monomial(table.at(n - j - 1, j),
                                 static_cast<std::size_t>(2 * n - 3 * j - 2));
    return out;
}

IntPoly fibonacci_poly_closed(std::int64_t n) {
    if (n < 1) throw std::domain_error("fibonacci_poly_closed requires n >= 1");
    IntPoly out;
    for (std::int64_t j = 0; j <= (n - 1) / 2; ++j)
        out += IntPoly::monomial(binomial(n - j - 1, j),
                                 static_cast<std::size_t>(n - 2 * j - 1));
    return out;
}

namespace {

void check_incomplete_domain(std::int64_t n, std::int64_t s) {
    if (n < 1) throw std::domain_error("incomplete sums require n >= 1");
    if (s < 0 || s > n / 2) throw std::domain_error("incomplete sums require 0 <= s <= n/2");
}

// Shared term walk. Terms with n-i-j <= 0 pair a vanishing binomial with
// an undefined ratio and are skipped, as are negative exponents; neither
// ever discards a nonzero contribution (checked by the completion tests).
template <typename Sink>
void for_each_term(std::int64_t n, std::int64_t s, Sink&& sink) {
    for (std::int64_t i = 0; i <= s; ++i) {
        for (std::int64_t j = 0; j <= i; ++j) {
            const std::int64_t rest = n - i - j;
            if (rest <= 0) continue;
            const std::int64_t exponent = 2 * n - 3 * (i + j);
            if (exponent < 0) continue;
            const BigInt raw = BigInt(n) * binomial(i, j) * binomial(rest, i);
            if (raw == 0) continue;
            sink(exponent, divide_exact(raw, BigInt(rest)));
        }
    }
}

}  // namespace

IntPoly incomplete_tl_poly(std::int64_t n, std::int64_t s) {
    check_incomplete_domain(n, s);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1);
    for_each_term(n, s, [&coeffs](std::int64_t exponent, const BigInt& term) {
        coeffs[static_cast<std::size_t>(exponent)] += term;
    });
    return IntPoly(std::move(coeffs));
}

BigInt incomplete_tl_number(std::int64_t n, std::int64_t s) {
    check_incomplete_domain(n, s);
    BigInt total = 0;
    for_each_term(n, s, [&total](std::int64_t, const BigInt& term) { total += term; });
    return total;
}

}  // namespace tribolucas
