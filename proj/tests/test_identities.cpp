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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tribolucas/identities.hpp"
#include "tribolucas/json_io.hpp"
#include "tribolucas/seq.hpp"

using namespace tribolucas;
using tribolucas::testing::P;

namespace {

// -(K_{j+m} + K_{j-m} + (1 - K_m) K_j), the constant block the corrected
// closed form adds to the n-dependent part.
IntPoly corrected_constant(std::int64_t m, std::int64_t j) {
    const IntPoly one_minus = IntPoly(1) - tribonacci_lucas_poly(m);
    return -(tribonacci_lucas_poly(j + m) + tribonacci_lucas_poly(j - m) +
             one_minus * tribonacci_lucas_poly(j));
}

IntPoly printed_constant(std::int64_t m, std::int64_t j) {
    const IntPoly one_minus = IntPoly(1) - tribonacci_lucas_poly(m);
    return -(tribonacci_lucas_poly(j + m) + tribonacci_lucas_poly(m - j) +
             one_minus * tribonacci_lucas_poly(j));
}

// K_{mn+j+m} + K_{mn+j-m} + (1 - K_m) K_{mn+j}, the n-dependent block.
IntPoly leading_block(std::int64_t m, std::int64_t j, std::int64_t n) {
    const IntPoly one_minus = IntPoly(1) - tribonacci_lucas_poly(m);
    return tribonacci_lucas_poly(m * n + j + m) + tribonacci_lucas_poly(m * n + j - m) +
           one_minus * tribonacci_lucas_poly(m * n + j);
}

}  // namespace

TEST_CASE("relation between the two polynomial families") {
    CHECK(k_from_t(2) == P("x^4+2x"));
    CHECK(k_from_t(3) == P("x^6+3x^3+3"));
    CHECK_THROWS_AS(k_from_t(1), std::domain_error);

    for (std::int64_t n = 2; n <= 60; ++n) CHECK(k_from_t(n) == tribonacci_lucas_poly(n));

    // number corollary at x = 1: K_n = T_n + 2 T_{n-1} + 3 T_{n-2}
    for (std::int64_t n = 2; n <= 60; ++n) {
        CHECK(tribonacci_lucas_number(n) == tribonacci_number(n) + 2 * tribonacci_number(n - 1) +
                                                3 * tribonacci_number(n - 2));
        CHECK(k_from_t(n).eval_int(1) == tribonacci_lucas_number(n));
    }
}

TEST_CASE("binomial sum for index 3n") {
    CHECK(binomial_k3n(0) == P("3"));
    CHECK(binomial_k3n(1) == P("x^6+3x^3+3"));
    CHECK(binomial_k3n(1).eval_int(1) == 7);
    CHECK_THROWS_AS(binomial_k3n(-1), std::domain_error);

    for (std::int64_t n = 0; n <= 15; ++n) {
        CHECK(binomial_k3n(n) == tribonacci_lucas_poly(3 * n));
        // number corollary at x = 1
        BigInt sum = 0;
        for (std::int64_t i = 0; i <= n; ++i)
            for (std::int64_t j = 0; j <= i; ++j)
                sum += binomial(n, i) * binomial(i, j) * tribonacci_lucas_number(i + j);
        CHECK(sum == tribonacci_lucas_number(3 * n));
    }
}

TEST_CASE("brute-force progression sums") {
    CHECK(arith_prog_sum_bruteforce(1, 0, 3) == P("x^4+x^2+2x+3"));
    CHECK(arith_prog_sum_bruteforce(2, 0, 1) == P("3"));
    CHECK(arith_prog_sum_bruteforce(2, 1, 1) == P("x^2"));
    CHECK_THROWS_AS(arith_prog_sum_bruteforce(1, 0, 0), std::domain_error);
    CHECK_THROWS_AS(arith_prog_sum_bruteforce(1, 1, 2), std::domain_error);
    CHECK_THROWS_AS(arith_prog_sum_bruteforce(2, -1, 2), std::domain_error);
}

TEST_CASE("corrected closed form, hand-checked pieces") {
    const ClosedSum c = arith_prog_sum_closed(1, 0, 1);
    CHECK(c.denominator == P("x^2+x"));
    CHECK(c.numerator == P("3x^2+3x"));  // denominator times the single term K_0 = 3

    // subtracted block for m=1, j=0 is -(2x^2+x-3)
    CHECK(corrected_constant(1, 0) == P("2x^2+x-3"));
}

TEST_CASE("corrected closed form is an exact identity over the grid") {
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t j = 0; j < m; ++j)
            for (std::int64_t n = 1; n <= 15; ++n) {
                const ClosedSum c = arith_prog_sum_closed(m, j, n);
                CHECK(c.numerator == c.denominator * arith_prog_sum_bruteforce(m, j, n));
            }
}

TEST_CASE("as-printed closed form undercounts by one denominator at j = 0") {
    CHECK(arith_prog_sum_as_printed(1, 0, 1).numerator == P("2x^2+2x"));
    CHECK(arith_prog_sum_as_printed(2, 0, 1).numerator == P("2x^4+2x^2+4x"));
    // deficit of one unit persists for all n at j = 0
    CHECK(arith_prog_sum_as_printed(1, 0, 2).numerator ==
          arith_prog_sum_as_printed(1, 0, 2).denominator * P("x^2+2"));

    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t n = 1; n <= 10; ++n) {
            const ClosedSum printed = arith_prog_sum_as_printed(m, 0, n);
            const ClosedSum corrected = arith_prog_sum_closed(m, 0, n);
            CHECK(printed.denominator == corrected.denominator);
            CHECK(printed.numerator + printed.denominator == corrected.numerator);
        }
}

TEST_CASE("as-printed residual equals its prediction for every j") {
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t j = 0; j < m; ++j) {
            const IntPoly predicted = printed_residual_prediction(m, j);
            CHECK_FALSE(predicted.is_zero());
            for (std::int64_t n = 1; n <= 6; ++n) {
                const ClosedSum printed = arith_prog_sum_as_printed(m, j, n);
                const IntPoly residual =
                    printed.numerator - printed.denominator * arith_prog_sum_bruteforce(m, j, n);
                CHECK(residual == predicted);
            }
        }
    CHECK(printed_residual_prediction(1, 0) == P("-x^2-x"));
}

TEST_CASE("specialized constants: corrected ones agree with direct summation") {
    // m = 1: the corrected constant coincides with the published one.
    CHECK(corrected_constant(1, 0) == P("2x^2+x-3"));

    // m = 2 published constants (X_{-2} substituted) disagree with direct
    // summation at n = 1; the corrected ones agree.
    CHECK(printed_constant(2, 0) == P("x^4+2x-3"));
    CHECK(printed_constant(2, 1) == P("-x^3-2x^2-3"));
    CHECK(corrected_constant(2, 0) == P("2x^4+x^2+4x-3"));
    CHECK(corrected_constant(2, 1) == P("-x^3-x^2+x-3"));

    for (std::int64_t j = 0; j <= 1; ++j) {
        const IntPoly target =
            arith_prog_sum_closed(2, j, 1).denominator * arith_prog_sum_bruteforce(2, j, 1);
        CHECK(leading_block(2, j, 1) + corrected_constant(2, j) == target);
        CHECK_FALSE(leading_block(2, j, 1) + printed_constant(2, j) == target);
    }
}

TEST_CASE("verify produces exact reports") {
    const VerificationReport ok = verify({IdentityId::ThmTfromK, 10, 0, 0});
    CHECK(ok.pass);
    CHECK(ok.residual.is_zero());
    CHECK(ok.error.empty());

    const VerificationReport corrected = verify({IdentityId::ArithProgSumCorrected, 5, 3, 2});
    CHECK(corrected.pass);
    CHECK(corrected.residual.is_zero());

    const VerificationReport printed = verify({IdentityId::ArithProgSumAsPrinted, 1, 1, 0});
    CHECK_FALSE(printed.pass);
    CHECK(printed.residual == P("-x^2-x"));
}

TEST_CASE("domain errors surface in the report instead of throwing") {
    const VerificationReport bad = verify({IdentityId::ThmTfromK, 1, 0, 0});
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.error.empty());

    const VerificationReport bad_prog = verify({IdentityId::ArithProgSumCorrected, 2, 1, 1});
    CHECK_FALSE(bad_prog.pass);
    CHECK_FALSE(bad_prog.error.empty());
}

TEST_CASE("parallel sweep matches the serial reference") {
    std::vector<IdentityInstance> grid;
    for (std::int64_t m = 1; m <= 4; ++m)
        for (std::int64_t j = 0; j < m; ++j)
            for (std::int64_t n = 1; n <= 8; ++n) {
                grid.push_back({IdentityId::ArithProgSumCorrected, n, m, j});
                grid.push_back({IdentityId::ArithProgSumAsPrinted, n, m, j});
            }
    grid.push_back({IdentityId::ThmTfromK, 1, 0, 0});  // domain error included
    for (std::int64_t n = 2; n <= 20; ++n) grid.push_back({IdentityId::ThmTfromK, n, 0, 0});

    const auto serial = verify_all_serial(grid);
    const auto parallel = verify_all_parallel(grid);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].lhs == parallel[i].lhs);
        CHECK(serial[i].rhs == parallel[i].rhs);
        CHECK(serial[i].residual == parallel[i].residual);
        CHECK(serial[i].error == parallel[i].error);
    }
}

TEST_CASE("report JSON carries the documented schema") {
    const VerificationReport r = verify({IdentityId::ArithProgSumAsPrinted, 1, 1, 0});
    const nlohmann::json j = report_to_json(r);
    CHECK(j["identity"] == "thm6-as-printed");
    CHECK(j["params"]["m"] == 1);
    CHECK(j["params"]["j"] == 0);
    CHECK(j["params"]["n"] == 1);
    CHECK(j["pass"] == false);
    CHECK(j["residual"] == "-x^2-x");

    const nlohmann::json ok = report_to_json(verify({IdentityId::ThmTfromK, 7, 0, 0}));
    CHECK(ok["identity"] == "thm2");
    CHECK(ok["pass"] == true);
    CHECK(ok["residual"] == "0");
    CHECK_FALSE(ok.contains("error"));
}
