//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/potentials.hpp"

#include <stdexcept>

namespace airyscat {

PotentialSpec hydrogen_spec(double a)
{
    if (!(a > 0.0))
        throw std::invalid_argument("hydrogen_spec: a must be positive");
    return {PotentialKind::Hydrogen, 1.0, a, 0.5 * a};
}

PotentialSpec yukawa_spec(double V0, double mu)
{
    if (!(mu > 0.0))
        throw std::invalid_argument("yukawa_spec: mu must be positive");
    return {PotentialKind::Yukawa, 0.0, 2.0 / mu, -2.0 * V0 / (mu * mu)};
}

Complex i_function(double eta, Complex z)
{
    if (z.real() <= 0.0)
        throw std::domain_error("i_function: defining integral diverges for Re(z) <= 0");
    Complex inv = 1.0 / z;
    return inv + eta * inv * inv;
}

double born_amplitude(const PotentialSpec& spec, double q2)
{
    if (q2 < 0.0)
        throw std::invalid_argument("born_amplitude: q2 must be non-negative");
    double z = 1.0 + 0.25 * q2 * spec.a * spec.a;
    return spec.f0 * i_function(spec.eta, {z, 0.0}).real();
}

}  // namespace airyscat
