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

#ifndef TRIBOLUCAS_INTPOLY_HPP
#define TRIBOLUCAS_INTPOLY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribolucas/bigint.hpp"

namespace tribolucas {

/// Syntax error raised by IntPoly::parse; position is the byte offset of
/// the offending character in the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/**
 * Dense univariate polynomial over BigInt, coefficients stored ascending
 * by power of x. Always normalized: the highest stored coefficient is
 * nonzero, and the zero polynomial stores nothing at all (its degree is
 * "minus infinity", reported as std::nullopt rather than some integer).
 *
 * Values are immutable in practice: every operation returns a fresh
 * polynomial, so sharing across threads needs no synchronization.
 */
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(long constant) : coeffs_{BigInt(constant)} { normalize(); }
    explicit IntPoly(BigInt constant) : coeffs_{std::move(constant)} { normalize(); }
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPoly monomial(BigInt coeff, std::size_t power);

    /// Parses the text grammar: integer-coefficient terms `c*x^k`, `cx^k`,
    /// `x^k`, `x`, `c` joined by '+'/'-', arbitrary whitespace.
    static IntPoly parse(std::string_view text);

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<std::int64_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    /// Coefficient of x^i (zero beyond the stored range).
    const BigInt& coeff(std::size_t i) const noexcept {
        static const BigInt kZero = 0;
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    /// Exact Horner evaluation.
    BigInt eval_int(const BigInt& x0) const;

    /// Floating-point Horner evaluation.
    double eval_real(double x0) const;

    /// Multiplication by x^k.
    IntPoly shifted(std::size_t k) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& scalar);

    bool operator==(const IntPoly& rhs) const noexcept { return coeffs_ == rhs.coeffs_; }

   private:
    std::vector<BigInt> coeffs_;

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    friend IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);
    friend IntPoly mul_parallel(const IntPoly& a, const IntPoly& b);
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);

/// Convolution product. Dispatches to the OpenMP kernel for large inputs,
/// otherwise to the serial one; both produce identical results.
IntPoly operator*(const IntPoly& a, const IntPoly& b);

IntPoly operator*(const BigInt& scalar, const IntPoly& p);
IntPoly operator*(const IntPoly& p, const BigInt& scalar);

/// Serial reference convolution.
IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);

/// OpenMP convolution, parallel over output coefficients.
IntPoly mul_parallel(const IntPoly& a, const IntPoly& b);

/// Descending-power rendering; zero terms omitted; the zero polynomial
/// renders as "0". parse(to_string(p)) == p for every normalized p.
std::string to_string(const IntPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace tribolucas

#endif
