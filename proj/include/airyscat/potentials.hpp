//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "airyscat/airy.hpp"

namespace airyscat {

enum class PotentialKind
{
    Hydrogen,
    Yukawa,
};

/// Unified potential descriptor: Born amplitude f(q) = f0 (1/z + eta/z^2)
/// with z = 1 + q^2 a^2/4.
struct PotentialSpec
{
    PotentialKind kind = PotentialKind::Hydrogen;
    double eta = 1.0;
    double a = 1.0;   // effective radius
    double f0 = 0.5;  // amplitude, units of length
};

/// Hydrogen ground state screened Coulomb: eta = 1, f0 = a/2.
PotentialSpec hydrogen_spec(double a);

/// Yukawa -V0 exp(-mu r)/(mu r) with m_e = 1 (atomic units):
/// eta = 0, a = 2/mu, f0 = -2 V0 / mu^2.
PotentialSpec yukawa_spec(double V0, double mu);

/// Closed form of the integral of (1 + eta s) exp(-s z) over s >= 0,
/// i.e. 1/z + eta/z^2. Throws std::domain_error for Re(z) <= 0.
Complex i_function(double eta, Complex z);

/// Plane-wave Born amplitude at squared momentum transfer q2 >= 0.
double born_amplitude(const PotentialSpec& spec, double q2);

}  // namespace airyscat
