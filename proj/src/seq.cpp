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

#include "tribolucas/seq.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tribolucas {

namespace {

// Number window: forward next = c + b + a, backward prev = c - b - a
// (indices n+2, n+1, n held as c, b, a).
BigInt number_term(std::int64_t n, BigInt p0, BigInt p1, BigInt p2) {
    if (n >= 0) {
        if (n == 0) return p0;
        if (n == 1) return p1;
        BigInt a = std::move(p0), b = std::move(p1), c = std::move(p2);
        for (std::int64_t i = 2; i < n; ++i) {
            BigInt next = c + b + a;
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }
    BigInt a = std::move(p0), b = std::move(p1), c = std::move(p2);
    for (std::int64_t i = 0; i > n; --i) {
        BigInt prev = c - b - a;
        c = std::move(b);
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

IntPoly poly_step_forward(const IntPoly& a, const IntPoly& b, const IntPoly& c) {
    // x^2 c + x b + a: shifts and adds only.
    IntPoly next = c.shifted(2);
    next += b.shifted(1);
    next += a;
    return next;
}

IntPoly poly_step_backward(const IntPoly& a, const IntPoly& b, const IntPoly& c) {
    // P_n = P_{n+3} - x^2 P_{n+2} - x P_{n+1} with (a, b, c) = (P_{n+1}, P_{n+2}, P_{n+3}).
    IntPoly prev = c;
    prev -= b.shifted(2);
    prev -= a.shifted(1);
    return prev;
}

IntPoly poly_term(std::int64_t n, IntPoly p0, IntPoly p1, IntPoly p2) {
    if (n >= 0) {
        if (n == 0) return p0;
        if (n == 1) return p1;
        IntPoly a = std::move(p0), b = std::move(p1), c = std::move(p2);
        for (std::int64_t i = 2; i < n; ++i) {
            IntPoly next = poly_step_forward(a, b, c);
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }
    IntPoly a = std::move(p0), b = std::move(p1), c = std::move(p2);
    for (std::int64_t i = 0; i > n; --i) {
        IntPoly prev = poly_step_backward(a, b, c);
        c = std::move(b);
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

void check_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::domain_error("range lo exceeds hi");
}

template <typename Value, typename Fwd, typename Bwd>
std::vector<Value> range_impl(std::int64_t lo, std::int64_t hi, Value p0, Value p1, Value p2,
                              Fwd forward, Bwd backward) {
    check_range(lo, hi);
    std::vector<Value> out(static_cast<std::size_t>(hi - lo + 1));
    auto put = [&](std::int64_t idx, const Value& v) {
        if (idx >= lo && idx <= hi) out[static_cast<std::size_t>(idx - lo)] = v;
    };
    put(0, p0);
    put(1, p1);
    put(2, p2);
    if (hi > 2) {
        Value a = p0, b = p1, c = p2;
        for (std::int64_t i = 3; i <= hi; ++i) {
            Value next = forward(a, b, c);
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
            put(i, c);
        }
    }
    if (lo < 0) {
        Value a = std::move(p0), b = std::move(p1), c = std::move(p2);
        for (std::int64_t i = -1; i >= lo; --i) {
            Value prev = backward(a, b, c);
            c = std::move(b);
            b = std::move(a);
            a = std::move(prev);
            put(i, a);
        }
    }
    return out;
}

BigInt num_fwd(const BigInt& a, const BigInt& b, const BigInt& c) { return c + b + a; }
BigInt num_bwd(const BigInt& a, const BigInt& b, const BigInt& c) { return c - b - a; }

const IntPoly kZeroPoly;
const IntPoly kOnePoly(1);

IntPoly x_pow(std::size_t k) { return IntPoly::monomial(BigInt(1), k); }

}  // namespace

BigInt tribonacci_number(std::int64_t n) { return number_term(n, 0, 1, 1); }

BigInt tribonacci_lucas_number(std::int64_t n) { return number_term(n, 3, 1, 3); }

IntPoly tribonacci_poly(std::int64_t n) { return poly_term(n, kZeroPoly, kOnePoly, x_pow(2)); }

IntPoly tribonacci_lucas_poly(std::int64_t n) {
    // seeds 3, x^2, x^4 + 2x
    IntPoly k2 = x_pow(4);
    k2 += IntPoly::monomial(BigInt(2), 1);
    return poly_term(n, IntPoly(3), x_pow(2), std::move(k2));
}

std::vector<BigInt> tribonacci_number_range(std::int64_t lo, std::int64_t hi) {
    return range_impl<BigInt>(lo, hi, 0, 1, 1, num_fwd, num_bwd);
}

std::vector<BigInt> tribonacci_lucas_number_range(std::int64_t lo, std::int64_t hi) {
    return range_impl<BigInt>(lo, hi, 3, 1, 3, num_fwd, num_bwd);
}

std::vector<IntPoly> tribonacci_poly_range(std::int64_t lo, std::int64_t hi) {
    return range_impl<IntPoly>(lo, hi, kZeroPoly, kOnePoly, x_pow(2), poly_step_forward,
                               poly_step_backward);
}

std::vector<IntPoly> tribonacci_lucas_poly_range(std::int64_t lo, std::int64_t hi) {
    IntPoly k2 = x_pow(4);
    k2 += IntPoly::monomial(BigInt(2), 1);
    return range_impl<IntPoly>(lo, hi, IntPoly(3), x_pow(2), std::move(k2), poly_step_forward,
                               poly_step_backward);
}

Mat3<IntPoly> companion_matrix() {
    Mat3<IntPoly> m;
    m.at(0, 0) = x_pow(2);
    m.at(0, 1) = x_pow(1);
    m.at(0, 2) = kOnePoly;
    m.at(1, 0) = kOnePoly;
    m.at(2, 1) = kOnePoly;
    return m;
}

Mat3<IntPoly> companion_matrix_inverse() {
    Mat3<IntPoly> m;
    m.at(0, 1) = kOnePoly;
    m.at(1, 2) = kOnePoly;
    m.at(2, 0) = kOnePoly;
    m.at(2, 1) = -x_pow(2);
    m.at(2, 2) = -x_pow(1);
    return m;
}

namespace {

Mat3<BigInt> number_companion() {
    Mat3<BigInt> m;
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(0, 2) = 1;
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    return m;
}

Mat3<BigInt> number_companion_inverse() {
    Mat3<BigInt> m;
    m.at(0, 1) = 1;
    m.at(1, 2) = 1;
    m.at(2, 0) = 1;
    m.at(2, 1) = -1;
    m.at(2, 2) = -1;
    return m;
}

// The power matrix maps the seed state (P_2, P_1, P_0) to
// (P_{n+2}, P_{n+1}, P_n); the bottom row dotted with the seeds is P_n.
template <typename T>
T fast_term(const Mat3<T>& step, std::uint64_t exponent, const T& p0, const T& p1, const T& p2) {
    Mat3<T> w = mat_pow(step, exponent);
    T r = w.at(2, 0) * p2;
    r += w.at(2, 1) * p1;
    r += w.at(2, 2) * p0;
    return r;
}

std::uint64_t magnitude(std::int64_t n) {
    return n >= 0 ? static_cast<std::uint64_t>(n)
                  : static_cast<std::uint64_t>(-(n + 1)) + 1u;
}

}  // namespace

SeqValue fast_eval(SequenceKind kind, std::int64_t n) {
    const std::uint64_t e = magnitude(n);
    switch (kind) {
        case SequenceKind::TribonacciNumber: {
            Mat3<BigInt> m = n >= 0 ? number_companion() : number_companion_inverse();
            return fast_term<BigInt>(m, e, 0, 1, 1);
        }
        case SequenceKind::TribonacciLucasNumber: {
            Mat3<BigInt> m = n >= 0 ? number_companion() : number_companion_inverse();
            return fast_term<BigInt>(m, e, 3, 1, 3);
        }
        case SequenceKind::TribonacciPoly: {
            Mat3<IntPoly> m = n >= 0 ? companion_matrix() : companion_matrix_inverse();
            return fast_term<IntPoly>(m, e, kZeroPoly, kOnePoly, x_pow(2));
        }
        case SequenceKind::TribonacciLucasPoly: {
            Mat3<IntPoly> m = n >= 0 ? companion_matrix() : companion_matrix_inverse();
            IntPoly k2 = x_pow(4);
            k2 += IntPoly::monomial(BigInt(2), 1);
            return fast_term<IntPoly>(m, e, IntPoly(3), x_pow(2), k2);
        }
    }
    std::abort();  // unreachable
}

}  // namespace tribolucas
