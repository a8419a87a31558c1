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

#ifndef TRIBOLUCAS_IDENTITIES_HPP
#define TRIBOLUCAS_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// The identity families the verifier knows about.
///
/// ArithProgSumAsPrinted is the uncorrected closed form of the
/// arithmetic-progression sum as it circulates in print: its subtracted
/// block uses K_{m-j} where the derivation forces K_{j-m} (a negative
/// index when j < m). At j = 0 it undercounts the true sum by exactly one
/// denominator unit. It stays a first-class, tested operation; the
/// expected outcome for it is failure with that precise residual.
enum class IdentityId {
    ThmTfromK,
    BinomialK3n,
    ArithProgSumCorrected,
    ArithProgSumAsPrinted,
};

/// Stable name used by the CLI and JSON output.
const char* identity_name(IdentityId id);

/// One point of an identity family. Domains: ThmTfromK needs n >= 2,
/// BinomialK3n needs n >= 0, the progression sums need n > 0, m > j >= 0.
struct IdentityInstance {
    IdentityId id = IdentityId::ThmTfromK;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t j = 0;
};

/// Exact outcome for one instance. pass holds iff residual (= lhs - rhs)
/// is the zero polynomial; a domain violation is surfaced in `error`
/// rather than thrown.
struct VerificationReport {
    IdentityInstance instance;
    IntPoly lhs;
    IntPoly rhs;
    IntPoly residual;
    bool pass = false;
    std::string error;
};

/// x^2 T_n(x) + 2x T_{n-1}(x) + 3 T_{n-2}(x), defined for n >= 2; equals
/// the tribonacci-lucas polynomial K_n(x).
IntPoly k_from_t(std::int64_t n);

/// Double binomial sum over i <= n, j <= i of C(n,i) C(i,j) x^{i+j}
/// K_{i+j}(x); equals K_{3n}(x).
IntPoly binomial_k3n(std::int64_t n);

/// Oracle: direct term-by-term sum of K_{mi+j}(x) for i = 0..n-1.
IntPoly arith_prog_sum_bruteforce(std::int64_t m, std::int64_t j, std::int64_t n);

/// Closed form of a progression sum as an undivided fraction. The
/// denominator vanishes at x = 0 (the roots there are the cube roots of
/// unity), so the contract is the cleared identity
///   numerator == denominator * arith_prog_sum_bruteforce(m, j, n)
/// and no division ever happens.
struct ClosedSum {
    IntPoly numerator;
    IntPoly denominator;
};

/// Corrected closed form, derived from the power-sum representation:
///   numerator   = K_{mn+j+m} + K_{mn+j-m} + (1 - K_m) K_{mn+j}
///               - K_{j+m}  - K_{j-m}  - (1 - K_m) K_j
///   denominator = K_m - K_{-m}
ClosedSum arith_prog_sum_closed(std::int64_t m, std::int64_t j, std::int64_t n);

/// The uncorrected ("as printed") variant: K_{m-j} in place of K_{j-m}.
ClosedSum arith_prog_sum_as_printed(std::int64_t m, std::int64_t j, std::int64_t n);

/// What the as-printed variant misses: its residual against the cleared
/// identity is K_{j-m}(x) - K_{m-j}(x), independent of n. At j = 0 that is
/// exactly minus the denominator.
IntPoly printed_residual_prediction(std::int64_t m, std::int64_t j);

/// Evaluates one instance exactly. For the progression sums the residual
/// is numerator - denominator * brute-force sum.
VerificationReport verify(const IdentityInstance& instance);

// Grid sweeps. Instances are independent, so the parallel sweep fans out
// with OpenMP and writes each report into its input slot; both produce
// byte-identical report vectors. verify_all picks a path by grid size.
std::vector<VerificationReport> verify_all_serial(const std::vector<IdentityInstance>& instances);
std::vector<VerificationReport> verify_all_parallel(const std::vector<IdentityInstance>& instances);
std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& instances);

}  // namespace tribolucas

#endif
