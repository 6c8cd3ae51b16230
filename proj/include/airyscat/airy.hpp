//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

namespace airyscat {

using Complex = std::complex<double>;

/// Airy function Ai(z) for complex argument.
///
/// Evaluation domain |z| <= 1e4; relative accuracy better than 1e-10 for
/// |z| <= 30. Throws std::domain_error outside the domain and
/// std::overflow_error when the unscaled value leaves the representable
/// range (use airy_ai_scaled for large |z| with Re(z) >= 0).
Complex airy_ai(Complex z);

/// Ai(z) * exp((2/3) z^{3/2}), principal branch (cut along the negative
/// real axis). Finite for all Re(z) >= 0 regardless of |z|; no upper
/// bound on |z|. Throws std::domain_error for z on the negative real
/// axis.
Complex airy_ai_scaled(Complex z);

/// n-th negative real zero a_n of Ai (1-based), |error| < 1e-10.
/// Supported range 1 <= n <= 100; throws std::out_of_range otherwise.
double airy_zero(int n);

/// Independent contour-integral evaluation of Ai(z) along a
/// steepest-descent-friendly path. Validation oracle for airy_ai;
/// accurate to ~1e-9 relative for |z| <= 30. Throws std::domain_error for
/// |z| > 30 and std::runtime_error if the path quadrature does not
/// converge.
Complex airy_contour_oracle(Complex z);

}  // namespace airyscat
