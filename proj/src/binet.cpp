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

#include "tribolucas/binet.hpp"

#include <algorithm>
#include <cmath>

#include "tribolucas/seq.hpp"

namespace tribolucas {

namespace {

using Complex = std::complex<double>;

// Characteristic cubic and derivative at real lambda, for Newton polish.
double cubic_value(double x0, double t) { return ((t - x0 * x0) * t - x0) * t - 1.0; }
double cubic_slope(double x0, double t) { return (3.0 * t - 2.0 * x0 * x0) * t - x0; }

double newton_polish(double x0, double t) {
    for (int i = 0; i < 2; ++i) {
        const double slope = cubic_slope(x0, t);
        if (slope == 0.0) break;
        t -= cubic_value(x0, t) / slope;
    }
    return t;
}

}  // namespace

CubicRoots characteristic_roots(double x0) {
    // Monic form lambda^3 + a lambda^2 + b lambda + c.
    const double a = -x0 * x0;
    const double b = -x0;
    const double c = -1.0;
    const double shift = -a / 3.0;

    // Depressed cubic t^3 + p t + q, lambda = t + shift.
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    CubicRoots roots;
    roots.x0 = x0;

    if (disc >= 0.0) {
        // One real root; Cardano.
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + sq);
        const double v = std::cbrt(-q / 2.0 - sq);
        const double real_root = newton_polish(x0, u + v + shift);
        // Deflate with Vieta (product of all three roots is 1), so the
        // conjugate pair satisfies lambda^2 + (a + r) lambda + 1/r.
        const double u2 = a + real_root;
        const double v2 = 1.0 / real_root;
        const Complex s = std::sqrt(Complex(u2 * u2 - 4.0 * v2, 0.0));
        Complex l2 = (-u2 + s) / 2.0;
        Complex l3 = (-u2 - s) / 2.0;
        if (l2.imag() < l3.imag()) std::swap(l2, l3);
        roots.lambda1 = Complex(real_root, 0.0);
        roots.lambda2 = l2;
        roots.lambda3 = l3;
        return roots;
    }

    // Three real roots; trigonometric form t_k = r cos((phi - 2 pi k)/3)
    // with cos(phi) = 3q / (p r).
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double phi = std::acos(std::clamp(3.0 * q / (p * r), -1.0, 1.0));
    double real_roots[3];
    for (int k = 0; k < 3; ++k) {
        const double t = r * std::cos((phi - 2.0 * M_PI * k) / 3.0);
        real_roots[k] = newton_polish(x0, t + shift);
    }
    std::sort(real_roots, real_roots + 3,
              [](double lhs, double rhs) { return std::abs(lhs) > std::abs(rhs); });
    roots.lambda1 = Complex(real_roots[0], 0.0);
    roots.lambda2 = Complex(real_roots[1], 0.0);
    roots.lambda3 = Complex(real_roots[2], 0.0);
    return roots;
}

BinetCoefficients binet_coefficients(const CubicRoots& roots) {
    const Complex l1 = roots.lambda1, l2 = roots.lambda2, l3 = roots.lambda3;
    const double min_gap =
        std::min({std::abs(l1 - l2), std::abs(l1 - l3), std::abs(l2 - l3)});
    if (min_gap < 1e-8)
        throw DegenerateRootsError("characteristic roots nearly coincide (gap " +
                                   std::to_string(min_gap) + ")");

    const double x0 = roots.x0;
    const double k0 = 3.0;
    const double k1 = x0 * x0;
    const double k2 = x0 * x0 * x0 * x0 + 2.0 * x0;

    BinetCoefficients out;
    out.coeff1 = (k2 - (l2 + l3) * k1 + l2 * l3 * k0) / ((l1 - l2) * (l1 - l3));
    out.coeff2 = (k2 - (l1 + l3) * k1 + l1 * l3 * k0) / ((l2 - l1) * (l2 - l3));
    out.coeff3 = (k2 - (l1 + l2) * k1 + l1 * l2 * k0) / ((l3 - l1) * (l3 - l2));
    return out;
}

BinetCoefficients binet_coefficients(double x0) {
    return binet_coefficients(characteristic_roots(x0));
}

namespace {

std::complex<double> cpow_int(std::complex<double> base, std::int64_t n) {
    if (n < 0) return 1.0 / cpow_int(base, -n);
    std::complex<double> result = 1.0;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

}  // namespace

std::complex<double> binet_eval(double x0, std::int64_t n) {
    const CubicRoots roots = characteristic_roots(x0);
    const BinetCoefficients coeffs = binet_coefficients(roots);
    return coeffs.coeff1 * cpow_int(roots.lambda1, n) +
           coeffs.coeff2 * cpow_int(roots.lambda2, n) +
           coeffs.coeff3 * cpow_int(roots.lambda3, n);
}

IntPoly power_sum(std::int64_t m) {
    // The power sums of the characteristic roots satisfy the same
    // recurrence and seeds as the tribonacci-lucas polynomials, in both
    // directions (negative m walks the inverse roots). Validated
    // numerically and against a Newton-identities oracle in the tests;
    // used here as the single exact path.
    return tribonacci_lucas_poly(m);
}

}  // namespace tribolucas
