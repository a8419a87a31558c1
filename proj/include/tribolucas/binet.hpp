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

#ifndef TRIBOLUCAS_BINET_HPP
#define TRIBOLUCAS_BINET_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// Raised when the characteristic roots are too close for the Binet
/// quotients to be meaningful (pairwise distance < 1e-8). No confluent
/// fallback exists; this is an error path only.
struct DegenerateRootsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The three complex roots of lambda^3 = x0^2 lambda^2 + x0 lambda + 1.
/// When there is a single real root it is reported as lambda1; lambda2
/// and lambda3 are the conjugate pair (positive imaginary part first).
/// Vieta: sum = x0^2, product = 1, both to ~1e-9 in double precision.
struct CubicRoots {
    std::complex<double> lambda1;
    std::complex<double> lambda2;
    std::complex<double> lambda3;
    double x0 = 0.0;
};

/// Coefficients attached to the three root powers in the closed form
/// value(n) = coeff1*lambda1^n + coeff2*lambda2^n + coeff3*lambda3^n.
/// For the tribonacci-lucas seeds all three are analytically 1 (the
/// sequence is the plain power sum of the roots); the quotients are still
/// evaluated literally so that property can be checked, not assumed.
struct BinetCoefficients {
    std::complex<double> coeff1;
    std::complex<double> coeff2;
    std::complex<double> coeff3;
};

/// Cardano/trigonometric solution of the characteristic cubic at x0, with
/// a Newton polish of the real root(s) and a Vieta-exact deflation for the
/// conjugate pair.
CubicRoots characteristic_roots(double x0);

BinetCoefficients binet_coefficients(const CubicRoots& roots);
BinetCoefficients binet_coefficients(double x0);

/// coeff1*lambda1^n + coeff2*lambda2^n + coeff3*lambda3^n at the given x0.
/// The imaginary part vanishes (to rounding) for real x0.
std::complex<double> binet_eval(double x0, std::int64_t n);

/// Exact power sum lambda1^m + lambda2^m + lambda3^m as an element of the
/// integer polynomial ring, any signed m. Equals the tribonacci-lucas
/// polynomial at index m; negative m gives the inverse-root power sums.
IntPoly power_sum(std::int64_t m);

}  // namespace tribolucas

#endif
