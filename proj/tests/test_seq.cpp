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
#include "tribolucas/seq.hpp"

using namespace tribolucas;
using tribolucas::testing::P;

TEST_CASE("seed values") {
    CHECK(tribonacci_number(0) == 0);
    CHECK(tribonacci_number(1) == 1);
    CHECK(tribonacci_number(2) == 1);
    CHECK(tribonacci_lucas_number(0) == 3);
    CHECK(tribonacci_lucas_number(1) == 1);
    CHECK(tribonacci_lucas_number(2) == 3);

    CHECK(tribonacci_poly(0).is_zero());
    CHECK(tribonacci_poly(1) == P("1"));
    CHECK(tribonacci_poly(2) == P("x^2"));
    CHECK(tribonacci_lucas_poly(0) == P("3"));
    CHECK(tribonacci_lucas_poly(1) == P("x^2"));
    CHECK(tribonacci_lucas_poly(2) == P("x^4+2x"));
}

TEST_CASE("small forward values") {
    CHECK(tribonacci_number(5) == 7);
    CHECK(tribonacci_lucas_number(5) == 21);
    CHECK(tribonacci_number(50) == BigInt("5742568741225"));

    CHECK(tribonacci_poly(3) == P("x^4+x"));
    CHECK(tribonacci_poly(4) == P("x^6+2x^3+1"));
    CHECK(tribonacci_lucas_poly(3) == P("x^6+3x^3+3"));
    CHECK(tribonacci_lucas_poly(10) ==
          P("x^20+10x^17+45x^14+110x^11+150x^8+102x^5+25x^2"));
}

TEST_CASE("backward values") {
    CHECK(tribonacci_number(-1) == 0);
    CHECK(tribonacci_lucas_number(-1) == -1);
    CHECK(tribonacci_lucas_poly(-1) == P("-x"));
    CHECK(tribonacci_lucas_poly(-2) == P("-x^2"));
    CHECK(tribonacci_lucas_poly(-3) == P("2x^3+3"));
    CHECK(tribonacci_lucas_poly(-1).eval_int(1) == tribonacci_lucas_number(-1));
}

TEST_CASE("recurrence consistency, all four families, -30..200") {
    const auto t_nums = tribonacci_number_range(-30, 200);
    const auto k_nums = tribonacci_lucas_number_range(-30, 200);
    const auto t_polys = tribonacci_poly_range(-30, 200);
    const auto k_polys = tribonacci_lucas_poly_range(-30, 200);
    const IntPoly x2 = P("x^2");
    const IntPoly x1 = P("x");
    for (std::size_t i = 0; i + 3 < t_nums.size(); ++i) {
        CHECK(t_nums[i + 3] == t_nums[i + 2] + t_nums[i + 1] + t_nums[i]);
        CHECK(k_nums[i + 3] == k_nums[i + 2] + k_nums[i + 1] + k_nums[i]);
        CHECK(t_polys[i + 3] == x2 * t_polys[i + 2] + x1 * t_polys[i + 1] + t_polys[i]);
        CHECK(k_polys[i + 3] == x2 * k_polys[i + 2] + x1 * k_polys[i + 1] + k_polys[i]);
    }
}

TEST_CASE("polynomials specialize to numbers at x = 1") {
    const auto t_polys = tribonacci_poly_range(-30, 200);
    const auto k_polys = tribonacci_lucas_poly_range(-30, 200);
    const auto t_nums = tribonacci_number_range(-30, 200);
    const auto k_nums = tribonacci_lucas_number_range(-30, 200);
    for (std::size_t i = 0; i < t_polys.size(); ++i) {
        CHECK(t_polys[i].eval_int(1) == t_nums[i]);
        CHECK(k_polys[i].eval_int(1) == k_nums[i]);
    }
}

TEST_CASE("ranges agree with single-index evaluation") {
    const auto k_polys = tribonacci_lucas_poly_range(-7, 9);
    for (std::int64_t n = -7; n <= 9; ++n)
        CHECK(k_polys[static_cast<std::size_t>(n + 7)] == tribonacci_lucas_poly(n));
    CHECK_THROWS_AS(tribonacci_number_range(3, 2), std::domain_error);
}

TEST_CASE("companion matrix is unimodular and inverts exactly") {
    const Mat3<IntPoly> m = companion_matrix();
    const Mat3<IntPoly> minv = companion_matrix_inverse();
    CHECK(determinant(m) == IntPoly(1));

    const Mat3<IntPoly> id = Mat3<IntPoly>::identity();
    const Mat3<IntPoly> prod = m * minv;
    const Mat3<IntPoly> prod2 = minv * m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(prod.at(i, j) == id.at(i, j));
            CHECK(prod2.at(i, j) == id.at(i, j));
        }
}

TEST_CASE("fast_eval spot values") {
    CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciLucasNumber, 5)) == 21);
    CHECK(std::get<IntPoly>(fast_eval(SequenceKind::TribonacciLucasPoly, 0)) == P("3"));
    CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciNumber, 50)) ==
          tribonacci_number(50));
}

TEST_CASE("fast_eval matches the recurrence for numbers") {
    for (std::int64_t n = -64; n <= 64; ++n) {
        CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciNumber, n)) ==
              tribonacci_number(n));
        CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciLucasNumber, n)) ==
              tribonacci_lucas_number(n));
    }
    for (std::int64_t n : {1000, 10000, -1000}) {
        CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciNumber, n)) ==
              tribonacci_number(n));
        CHECK(std::get<BigInt>(fast_eval(SequenceKind::TribonacciLucasNumber, n)) ==
              tribonacci_lucas_number(n));
    }
}

TEST_CASE("fast_eval matches the recurrence for polynomials") {
    const auto t_polys = tribonacci_poly_range(-20, 96);
    const auto k_polys = tribonacci_lucas_poly_range(-20, 96);
    for (std::int64_t n = -20; n <= 96; ++n) {
        const std::size_t i = static_cast<std::size_t>(n + 20);
        CHECK(std::get<IntPoly>(fast_eval(SequenceKind::TribonacciPoly, n)) == t_polys[i]);
        CHECK(std::get<IntPoly>(fast_eval(SequenceKind::TribonacciLucasPoly, n)) == k_polys[i]);
    }
}

TEST_CASE("fast_eval matches the recurrence at distant polynomial indices") {
    CHECK(std::get<IntPoly>(fast_eval(SequenceKind::TribonacciPoly, 250)) ==
          tribonacci_poly(250));
    for (std::int64_t n : {250, 1000}) {
        CHECK(std::get<IntPoly>(fast_eval(SequenceKind::TribonacciLucasPoly, n)) ==
              tribonacci_lucas_poly(n));
    }
}
