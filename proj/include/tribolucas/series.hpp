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

#ifndef TRIBOLUCAS_SERIES_HPP
#define TRIBOLUCAS_SERIES_HPP

#include <cstdint>
#include <vector>

#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// Rational formal power series in z with IntPoly coefficients:
/// numerator(z) / denominator(z), both given as lists of z-coefficients.
/// The denominator's constant term (in z) must be the polynomial 1 so the
/// series inverse exists over the ring.
struct RationalSeries {
    std::vector<IntPoly> numerator;
    std::vector<IntPoly> denominator;

    RationalSeries(std::vector<IntPoly> numerator, std::vector<IntPoly> denominator);
};

/// First `count` z-coefficients, streamed by the convolution recurrence
/// c_k = numerator_k - sum_{i>=1} denominator_i * c_{k-i}. Exact.
std::vector<IntPoly> expand(const RationalSeries& series, std::int64_t count);

/// (3 - 2x^2 z - x z^2) / (1 - x^2 z - x z^2 - z^3); its z-coefficients
/// are the tribonacci-lucas polynomials.
RationalSeries tribonacci_lucas_gf();

/// Series for the recurrence P_{n+3} = x^2 P_{n+2} + x P_{n+1} + P_n with
/// the given seeds: numerator [p0, p1 - x^2 p0, p2 - x^2 p1 - x p0] over
/// the fixed denominator [1, -x^2, -x, -1].
RationalSeries gf_from_recurrence(const IntPoly& p0, const IntPoly& p1, const IntPoly& p2);

/// Evaluates every polynomial coefficient at x0, yielding the constant
/// (number) series.
RationalSeries specialize(const RationalSeries& series, const BigInt& x0);

}  // namespace tribolucas

#endif
