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

#ifndef TRIBOLUCAS_TESTS_HELPERS_HPP
#define TRIBOLUCAS_TESTS_HELPERS_HPP

#include <random>
#include <string_view>
#include <vector>

#include "tribolucas/intpoly.hpp"

namespace tribolucas::testing {

inline IntPoly P(std::string_view text) { return IntPoly::parse(text); }

inline BigInt random_bigint(std::mt19937& rng, int max_bits = 96) {
    std::uniform_int_distribution<int> bits(1, max_bits);
    std::uniform_int_distribution<int> bit(0, 1);
    BigInt v = 0;
    const int n = bits(rng);
    for (int i = 0; i < n; ++i) {
        v <<= 1;
        v += bit(rng);
    }
    if (bit(rng)) v = -v;
    return v;
}

/// Degree up to max_degree, with a chance of the zero polynomial and of
/// wide coefficients.
inline IntPoly random_poly(std::mt19937& rng, int max_degree = 8) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    const int d = deg(rng);
    if (d < 0) return IntPoly();
    std::vector<BigInt> cs(static_cast<std::size_t>(d) + 1);
    std::uniform_int_distribution<int> small(-9, 9);
    std::uniform_int_distribution<int> wide(0, 4);
    for (auto& c : cs) c = wide(rng) == 0 ? random_bigint(rng) : BigInt(small(rng));
    return IntPoly(std::move(cs));
}

}  // namespace tribolucas::testing

#endif
