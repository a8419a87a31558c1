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

#ifndef TRIBOLUCAS_SEQ_HPP
#define TRIBOLUCAS_SEQ_HPP

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// The four sequence families: P_{n+3} = x^2 P_{n+2} + x P_{n+1} + P_n for
/// the polynomial kinds, the same recurrence at x = 1 for the number kinds.
/// Seeds: tribonacci 0, 1, x^2 (numbers 0, 1, 1); tribonacci-lucas
/// 3, x^2, x^4 + 2x (numbers 3, 1, 3).
enum class SequenceKind {
    TribonacciNumber,
    TribonacciLucasNumber,
    TribonacciPoly,
    TribonacciLucasPoly,
};

// Linear-time window recurrence, forward and backward (all indices are
// first-class, negative included).
BigInt tribonacci_number(std::int64_t n);
BigInt tribonacci_lucas_number(std::int64_t n);
IntPoly tribonacci_poly(std::int64_t n);
IntPoly tribonacci_lucas_poly(std::int64_t n);

// Inclusive index windows [lo, hi], one recurrence pass; result[k] holds
// the value at index lo + k. Used by sweep and summation code so nothing
// gets recomputed per term.
std::vector<BigInt> tribonacci_number_range(std::int64_t lo, std::int64_t hi);
std::vector<BigInt> tribonacci_lucas_number_range(std::int64_t lo, std::int64_t hi);
std::vector<IntPoly> tribonacci_poly_range(std::int64_t lo, std::int64_t hi);
std::vector<IntPoly> tribonacci_lucas_poly_range(std::int64_t lo, std::int64_t hi);

/// Row-major 3x3 matrix over a ring.
template <typename T>
struct Mat3 {
    std::array<T, 9> e{};

    const T& at(int row, int col) const { return e[static_cast<std::size_t>(3 * row + col)]; }
    T& at(int row, int col) { return e[static_cast<std::size_t>(3 * row + col)]; }

    static Mat3 identity() {
        Mat3 m;
        m.at(0, 0) = T(1);
        m.at(1, 1) = T(1);
        m.at(2, 2) = T(1);
        return m;
    }
};

template <typename T>
Mat3<T> operator*(const Mat3<T>& a, const Mat3<T>& b) {
    Mat3<T> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T sum = a.at(i, 0) * b.at(0, j);
            sum += a.at(i, 1) * b.at(1, j);
            sum += a.at(i, 2) * b.at(2, j);
            r.at(i, j) = sum;
        }
    return r;
}

template <typename T>
T determinant(const Mat3<T>& m) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

/// Binary powering, exponent >= 0.
template <typename T>
Mat3<T> mat_pow(Mat3<T> base, std::uint64_t exponent) {
    Mat3<T> result = Mat3<T>::identity();
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

/// Companion matrix of the recurrence, [[x^2, x, 1], [1, 0, 0], [0, 1, 0]].
/// Its determinant is the constant 1, so it is invertible over the
/// polynomial ring and negative powers are available.
Mat3<IntPoly> companion_matrix();

/// Exact ring inverse of companion_matrix(): [[0,1,0],[0,0,1],[1,-x^2,-x]].
Mat3<IntPoly> companion_matrix_inverse();

using SeqValue = std::variant<BigInt, IntPoly>;

/// O(log |n|) evaluation: binary powering of the companion matrix (its
/// inverse for n < 0) applied to the seed vector. Agrees with the linear
/// recurrence for every kind and every signed index.
SeqValue fast_eval(SequenceKind kind, std::int64_t n);

}  // namespace tribolucas

#endif
