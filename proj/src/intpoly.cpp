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

#include "tribolucas/intpoly.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace tribolucas {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt divide_exact(const BigInt& value, const BigInt& divisor) {
    if (divisor == 0 || !mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()))
        throw IntegralityError("non-integral exact division: " + value.get_str() + " / " +
                               divisor.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    return q;
}

IntPoly IntPoly::monomial(BigInt coeff, std::size_t power) {
    if (coeff == 0) return IntPoly();
    std::vector<BigInt> cs(power + 1);
    cs[power] = std::move(coeff);
    return IntPoly(std::move(cs));
}

BigInt IntPoly::eval_int(const BigInt& x0) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x0;
        acc += coeffs_[i];
    }
    return acc;
}

double IntPoly::eval_real(double x0) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i].get_d();
    return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> cs(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
    return IntPoly(std::move(cs));
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (BigInt& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (BigInt& c : coeffs_) c *= scalar;
    return *this;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a);
    r += b;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a);
    r -= b;
    return r;
}

IntPoly operator*(const BigInt& scalar, const IntPoly& p) {
    IntPoly r(p);
    r *= scalar;
    return r;
}

IntPoly operator*(const IntPoly& p, const BigInt& scalar) { return scalar * p; }

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ac = a.coeffs_;
    const auto& bc = b.coeffs_;
    IntPoly r;
    r.coeffs_.assign(ac.size() + bc.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = 0; j < bc.size(); ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    r.normalize();
    return r;
}

IntPoly mul_parallel(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& ac = a.coeffs_;
    const auto& bc = b.coeffs_;
    const std::int64_t na = static_cast<std::int64_t>(ac.size());
    const std::int64_t nb = static_cast<std::int64_t>(bc.size());
    const std::int64_t nr = na + nb - 1;
    IntPoly r;
    r.coeffs_.assign(static_cast<std::size_t>(nr), BigInt(0));
    // Each thread owns a disjoint set of output coefficients; the inputs
    // are only read, so no synchronization is needed. Work per coefficient
    // is triangular in k, so hand out interleaved chunks.
#pragma omp parallel for schedule(static, 32)
    for (std::int64_t k = 0; k < nr; ++k) {
        BigInt& out = r.coeffs_[static_cast<std::size_t>(k)];
        const std::int64_t ilo = k < nb ? 0 : k - nb + 1;
        const std::int64_t ihi = k < na - 1 ? k : na - 1;
        for (std::int64_t i = ilo; i <= ihi; ++i)
            mpz_addmul(out.get_mpz_t(), ac[static_cast<std::size_t>(i)].get_mpz_t(),
                       bc[static_cast<std::size_t>(k - i)].get_mpz_t());
    }
    r.normalize();
    return r;
}

namespace {
// Below this many coefficient products the fork/join overhead dominates.
constexpr std::size_t kParallelMulThreshold = 1u << 21;
}  // namespace

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
#ifdef _OPENMP
    if (!a.is_zero() && !b.is_zero() &&
        a.coefficients().size() * b.coefficients().size() >= kParallelMulThreshold)
        return mul_parallel(a, b);
#endif
    return mul_schoolbook(a, b);
}

// --- text grammar -----------------------------------------------------

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    bool at_digit() const {
        return !done() && std::isdigit(static_cast<unsigned char>(peek()));
    }
};

std::string read_digits(Cursor& c) {
    const std::size_t start = c.pos;
    while (c.at_digit()) ++c.pos;
    return std::string(c.text.substr(start, c.pos - start));
}

constexpr std::size_t kMaxExponent = 1'000'000;

std::size_t read_exponent(Cursor& c) {
    if (!c.at_digit()) throw ParseError("expected exponent digits after '^'", c.pos);
    const std::size_t start = c.pos;
    const std::string digits = read_digits(c);
    if (digits.size() > 7 || std::stoull(digits) > kMaxExponent)
        throw ParseError("exponent too large", start);
    return static_cast<std::size_t>(std::stoull(digits));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    Cursor c{text};
    std::vector<BigInt> acc;
    auto add_term = [&acc](std::size_t power, const BigInt& coeff) {
        if (acc.size() <= power) acc.resize(power + 1);
        acc[power] += coeff;
    };

    c.skip_ws();
    if (c.done()) throw ParseError("empty polynomial", c.pos);

    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
        c.skip_ws();
    }

    for (;;) {
        // one term: [digits] [['*'] 'x' ['^' digits]]
        BigInt coeff = 1;
        bool has_coeff = false;
        if (c.at_digit()) {
            coeff = BigInt(read_digits(c));
            has_coeff = true;
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
                if (c.done() || c.peek() != 'x')
                    throw ParseError("expected 'x' after '*'", c.pos);
            }
        }
        std::size_t power = 0;
        if (!c.done() && c.peek() == 'x') {
            ++c.pos;
            power = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.pos;
                c.skip_ws();
                power = read_exponent(c);
            }
        } else if (!has_coeff) {
            throw ParseError("expected a term", c.pos);
        }
        if (sign < 0) coeff = -coeff;
        add_term(power, coeff);

        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+')
            sign = 1;
        else if (c.peek() == '-')
            sign = -1;
        else
            throw ParseError("expected '+' or '-'", c.pos);
        ++c.pos;
        c.skip_ws();
        if (c.done()) throw ParseError("dangling sign", c.pos);
    }
    return IntPoly(std::move(acc));
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    const auto& cs = p.coefficients();
    std::string out;
    for (std::size_t i = cs.size(); i-- > 0;) {
        const BigInt& c = cs[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        const BigInt mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace tribolucas
