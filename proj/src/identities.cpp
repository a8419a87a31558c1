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

#include "tribolucas/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "tribolucas/seq.hpp"

namespace tribolucas {

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::ThmTfromK: return "thm2";
        case IdentityId::BinomialK3n: return "thm4";
        case IdentityId::ArithProgSumCorrected: return "thm6-corrected";
        case IdentityId::ArithProgSumAsPrinted: return "thm6-as-printed";
    }
    return "unknown";
}

IntPoly k_from_t(std::int64_t n) {
    if (n < 2) throw std::domain_error("k_from_t requires n >= 2");
    const std::vector<IntPoly> t = tribonacci_poly_range(n - 2, n);
    IntPoly out = t[2].shifted(2);           // x^2 T_n
    out += BigInt(2) * t[1].shifted(1);      // 2x T_{n-1}
    out += BigInt(3) * t[0];                 // 3 T_{n-2}
    return out;
}

IntPoly binomial_k3n(std::int64_t n) {
    if (n < 0) throw std::domain_error("binomial_k3n requires n >= 0");
    const std::vector<IntPoly> k = tribonacci_lucas_poly_range(0, 2 * n);
    IntPoly out;
    for (std::int64_t i = 0; i <= n; ++i) {
        const BigInt outer = binomial(n, i);
        for (std::int64_t j = 0; j <= i; ++j) {
            const BigInt weight = outer * binomial(i, j);
            const std::size_t s = static_cast<std::size_t>(i + j);
            out += (weight * k[s]).shifted(s);
        }
    }
    return out;
}

namespace {

void check_prog_domain(std::int64_t m, std::int64_t j, std::int64_t n) {
    if (n <= 0 || j < 0 || m <= j)
        throw std::domain_error("progression sum requires n > 0 and m > j >= 0");
}

// One window covering every index either closed form touches.
struct KWindow {
    std::int64_t lo;
    std::vector<IntPoly> values;

    KWindow(std::int64_t lo, std::int64_t hi)
        : lo(lo), values(tribonacci_lucas_poly_range(lo, hi)) {}

    const IntPoly& at(std::int64_t idx) const {
        return values[static_cast<std::size_t>(idx - lo)];
    }
};

ClosedSum closed_sum_impl(std::int64_t m, std::int64_t j, std::int64_t n, bool corrected) {
    check_prog_domain(m, j, n);
    const KWindow k(std::min(j - m, -m), m * n + j + m);

    const IntPoly& x_neg = k.at(m);    // power sum of the roots to the m
    const IntPoly& x_pos = k.at(-m);   // power sum of the inverse roots
    IntPoly one_minus = IntPoly(1) - x_neg;

    IntPoly numerator = k.at(m * n + j + m) + k.at(m * n + j - m) + one_minus * k.at(m * n + j);
    numerator -= k.at(j + m);
    numerator -= corrected ? k.at(j - m) : k.at(m - j);
    numerator -= one_minus * k.at(j);

    return {std::move(numerator), x_neg - x_pos};
}

}  // namespace

IntPoly arith_prog_sum_bruteforce(std::int64_t m, std::int64_t j, std::int64_t n) {
    check_prog_domain(m, j, n);
    const KWindow k(j, m * (n - 1) + j);
    IntPoly sum;
    for (std::int64_t i = 0; i < n; ++i) sum += k.at(m * i + j);
    return sum;
}

ClosedSum arith_prog_sum_closed(std::int64_t m, std::int64_t j, std::int64_t n) {
    return closed_sum_impl(m, j, n, true);
}

ClosedSum arith_prog_sum_as_printed(std::int64_t m, std::int64_t j, std::int64_t n) {
    return closed_sum_impl(m, j, n, false);
}

IntPoly printed_residual_prediction(std::int64_t m, std::int64_t j) {
    if (j < 0 || m <= j) throw std::domain_error("prediction requires m > j >= 0");
    return tribonacci_lucas_poly(j - m) - tribonacci_lucas_poly(m - j);
}

VerificationReport verify(const IdentityInstance& instance) {
    VerificationReport report;
    report.instance = instance;
    try {
        switch (instance.id) {
            case IdentityId::ThmTfromK:
                report.lhs = tribonacci_lucas_poly(instance.n);
                report.rhs = k_from_t(instance.n);
                break;
            case IdentityId::BinomialK3n:
                report.lhs = tribonacci_lucas_poly(3 * instance.n);
                report.rhs = binomial_k3n(instance.n);
                break;
            case IdentityId::ArithProgSumCorrected: {
                ClosedSum cs = arith_prog_sum_closed(instance.m, instance.j, instance.n);
                report.lhs = std::move(cs.numerator);
                report.rhs =
                    cs.denominator * arith_prog_sum_bruteforce(instance.m, instance.j, instance.n);
                break;
            }
            case IdentityId::ArithProgSumAsPrinted: {
                ClosedSum cs = arith_prog_sum_as_printed(instance.m, instance.j, instance.n);
                report.lhs = std::move(cs.numerator);
                report.rhs =
                    cs.denominator * arith_prog_sum_bruteforce(instance.m, instance.j, instance.n);
                break;
            }
        }
        report.residual = report.lhs - report.rhs;
        report.pass = report.residual.is_zero();
    } catch (const std::exception& e) {
        report.pass = false;
        report.error = e.what();
    }
    return report;
}

std::vector<VerificationReport> verify_all_serial(const std::vector<IdentityInstance>& instances) {
    std::vector<VerificationReport> out(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = verify(instances[i]);
    return out;
}

std::vector<VerificationReport> verify_all_parallel(const std::vector<IdentityInstance>& instances) {
    std::vector<VerificationReport> out(instances.size());
    const std::int64_t count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = verify(instances[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& instances) {
#ifdef _OPENMP
    if (instances.size() >= 8) return verify_all_parallel(instances);
#endif
    return verify_all_serial(instances);
}

}  // namespace tribolucas
