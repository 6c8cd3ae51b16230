//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace airyscat::quad {

struct Result
{
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;     // absolute error estimate
    long evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7,15) quadrature on [a, b] for a
/// complex-valued integrand. Stops when the summed error estimate drops
/// below max(abs_tol, rel_tol * |integral|) or max_intervals is reached.
/// initial_subdivisions pre-splits [a, b] uniformly before refinement;
/// use it when the integrand oscillates too fast for a single panel's
/// error estimate to be trustworthy.
Result adaptive_gk15(const std::function<std::complex<double>(double)>& f,
                     double a,
                     double b,
                     double abs_tol,
                     double rel_tol,
                     int max_intervals = 2000,
                     int initial_subdivisions = 1);

/// Gauss-Hermite nodes and weights for weight exp(-x^2) on (-inf, inf).
struct HermiteRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

const HermiteRule& gauss_hermite(int n);

}  // namespace airyscat::quad
