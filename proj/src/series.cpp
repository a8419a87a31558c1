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

#include "tribolucas/series.hpp"

#include <stdexcept>
#include <utility>

namespace tribolucas {

RationalSeries::RationalSeries(std::vector<IntPoly> num, std::vector<IntPoly> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.empty() || !(denominator[0] == IntPoly(1)))
        throw std::domain_error("series denominator must have constant term 1");
}

std::vector<IntPoly> expand(const RationalSeries& series, std::int64_t count) {
    if (count < 0) throw std::domain_error("coefficient count must be >= 0");
    std::vector<IntPoly> out;
    out.reserve(static_cast<std::size_t>(count));
    const auto& num = series.numerator;
    const auto& den = series.denominator;
    for (std::int64_t k = 0; k < count; ++k) {
        IntPoly c = k < static_cast<std::int64_t>(num.size()) ? num[static_cast<std::size_t>(k)]
                                                              : IntPoly();
        const std::int64_t span = std::min<std::int64_t>(k, static_cast<std::int64_t>(den.size()) - 1);
        for (std::int64_t i = 1; i <= span; ++i)
            c -= den[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::vector<IntPoly> recurrence_denominator() {
    // 1 - x^2 z - x z^2 - z^3
    return {IntPoly(1), -IntPoly::monomial(BigInt(1), 2), -IntPoly::monomial(BigInt(1), 1),
            IntPoly(-1)};
}

}  // namespace

RationalSeries tribonacci_lucas_gf() {
    std::vector<IntPoly> num = {IntPoly(3), IntPoly::monomial(BigInt(-2), 2),
                                IntPoly::monomial(BigInt(-1), 1)};
    return RationalSeries(std::move(num), recurrence_denominator());
}

RationalSeries gf_from_recurrence(const IntPoly& p0, const IntPoly& p1, const IntPoly& p2) {
    std::vector<IntPoly> num(3);
    num[0] = p0;
    num[1] = p1 - p0.shifted(2);
    num[2] = p2 - p1.shifted(2) - p0.shifted(1);
    return RationalSeries(std::move(num), recurrence_denominator());
}

RationalSeries specialize(const RationalSeries& series, const BigInt& x0) {
    auto eval_all = [&x0](const std::vector<IntPoly>& polys) {
        std::vector<IntPoly> out;
        out.reserve(polys.size());
        for (const IntPoly& p : polys) out.emplace_back(p.eval_int(x0));
        return out;
    };
    return RationalSeries(eval_all(series.numerator), eval_all(series.denominator));
}

}  // namespace tribolucas
