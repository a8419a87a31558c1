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

// Compares the OpenMP kernels against their serial references:
//   - polynomial convolution (mul_parallel vs mul_schoolbook)
//   - identity-grid verification (verify_all_parallel vs verify_all_serial)
// and the two evaluation routes for distant indices (companion-matrix
// powering vs the linear recurrence).

#include <chrono>
#include <cstdio>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tribolucas/identities.hpp"
#include "tribolucas/intpoly.hpp"
#include "tribolucas/seq.hpp"

using namespace tribolucas;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

template <typename F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = clock_type::now();
        f();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

void bench_convolution() {
    std::printf("polynomial convolution (serial vs OpenMP)\n");
    for (const std::int64_t index : {200, 500, 1000}) {
        const IntPoly p = tribonacci_lucas_poly(index);
        IntPoly serial_result, parallel_result;
        const double t_serial = time_best_of(3, [&] { serial_result = mul_schoolbook(p, p); });
        const double t_parallel = time_best_of(3, [&] { parallel_result = mul_parallel(p, p); });
        std::printf("  deg %5lld squared: serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                    static_cast<long long>(*p.degree()), t_serial * 1e3, t_parallel * 1e3,
                    t_serial / t_parallel, serial_result == parallel_result ? "match" : "MISMATCH");
    }
}

void bench_verification_sweep() {
    std::printf("identity verification sweep (serial vs OpenMP)\n");
    std::vector<IdentityInstance> grid;
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t j = 0; j < m; ++j)
            for (std::int64_t n = 1; n <= 30; ++n)
                grid.push_back({IdentityId::ArithProgSumCorrected, n, m, j});
    for (std::int64_t n = 2; n <= 120; ++n) grid.push_back({IdentityId::ThmTfromK, n, 0, 0});
    for (std::int64_t n = 0; n <= 15; ++n) grid.push_back({IdentityId::BinomialK3n, n, 0, 0});

    std::vector<VerificationReport> serial_reports, parallel_reports;
    const double t_serial = time_best_of(3, [&] { serial_reports = verify_all_serial(grid); });
    const double t_parallel = time_best_of(3, [&] { parallel_reports = verify_all_parallel(grid); });
    bool match = serial_reports.size() == parallel_reports.size();
    for (std::size_t i = 0; match && i < serial_reports.size(); ++i)
        match = serial_reports[i].pass == parallel_reports[i].pass &&
                serial_reports[i].residual == parallel_reports[i].residual;
    std::printf("  %zu instances: serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                grid.size(), t_serial * 1e3, t_parallel * 1e3, t_serial / t_parallel,
                match ? "match" : "MISMATCH");
}

void bench_fast_eval() {
    std::printf("distant-index evaluation (linear recurrence vs matrix powering)\n");
    for (const std::int64_t n : {100000, 1000000}) {
        BigInt iterative, fast;
        const double t_iter = time_best_of(2, [&] { iterative = tribonacci_lucas_number(n); });
        const double t_fast = time_best_of(2, [&] {
            fast = std::get<BigInt>(fast_eval(SequenceKind::TribonacciLucasNumber, n));
        });
        std::printf("  n = %7lld: recurrence %8.2f ms   matrix power %8.2f ms   %s\n",
                    static_cast<long long>(n), t_iter * 1e3, t_fast * 1e3,
                    iterative == fast ? "match" : "MISMATCH");
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run serially\n\n");
#endif
    bench_convolution();
    std::printf("\n");
    bench_verification_sweep();
    std::printf("\n");
    bench_fast_eval();
    return 0;
}
