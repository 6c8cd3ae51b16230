//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/airy.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "airyscat/ddouble.hpp"
#include "airyscat/quadrature.hpp"

namespace airyscat {

namespace {

using detail::CDDouble;
using detail::DDouble;

constexpr double kPi = 3.14159265358979323846;

// Ai(0) = 3^{-2/3}/Gamma(2/3) and -Ai'(0) = 3^{-1/3}/Gamma(1/3),
// split into double-double pairs.
const DDouble kC1{0.3550280538878172, 2.05233632436212e-17};
const DDouble kC2{0.2588194037928068, -2.522243111610832e-17};

constexpr double kSeriesPlainRadius = 4.2;  // plain doubles suffice here
constexpr double kSeriesRadius = 9.0;       // double-double series up to here
constexpr double kConnectionArg = 2.1;      // rotate when |arg z| exceeds this

// Maclaurin series in plain double arithmetic. Cancellation grows like
// exp((4/3)|z|^{3/2}); keep |z| <= kSeriesPlainRadius.
Complex series_ai_plain(Complex z)
{
    Complex z3 = z * z * z;
    Complex f{1.0, 0.0};
    Complex g = z;
    Complex tf{1.0, 0.0};
    Complex tg = z;
    for (int k = 0; k < 80; ++k)
    {
        tf *= z3 / double((3 * k + 2) * (3 * k + 3));
        tg *= z3 / double((3 * k + 3) * (3 * k + 4));
        f += tf;
        g += tg;
        if (std::abs(tf) + std::abs(tg) < 1e-20 * (std::abs(f) + std::abs(g)))
            break;
    }
    return kC1.hi * f - kC2.hi * g;
}

// Same series accumulated in double-double arithmetic; accurate through
// the cancellation peak for |z| <= kSeriesRadius.
Complex series_ai_dd(Complex z)
{
    CDDouble zd{z.real(), z.imag()};
    CDDouble z3 = zd * zd * zd;
    CDDouble f{1.0, 0.0};
    CDDouble g = zd;
    CDDouble tf{1.0, 0.0};
    CDDouble tg = zd;
    double max_term = 1.0;
    for (int k = 0; k < 200; ++k)
    {
        tf = tf * z3 / double((3 * k + 2) * (3 * k + 3));
        tg = tg * z3 / double((3 * k + 3) * (3 * k + 4));
        f = f + tf;
        g = g + tg;
        double m = detail::abs_estimate(tf) + detail::abs_estimate(tg);
        max_term = std::max(max_term, m);
        if (m < 1e-34 * max_term)
            break;
    }
    CDDouble result{kC1 * f.re - kC2 * g.re, kC1 * f.im - kC2 * g.im};
    return {result.re.to_double(), result.im.to_double()};
}

// Asymptotic series for Ai(z)*exp(t), t = (2/3) z^{3/2}; requires
// |arg z| comfortably below pi and |z| >= kSeriesRadius.
Complex asymptotic_ai_scaled(Complex z)
{
    Complex zs = std::sqrt(z);
    Complex t = (2.0 / 3.0) * zs * zs * zs;
    Complex inv_t = 1.0 / t;
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    double prev = 1.0;
    for (int k = 1; k < 60; ++k)
    {
        double ratio = double((6 * k - 5)) * double((6 * k - 3)) * double((6 * k - 1))
                       / (double(2 * k - 1) * 216.0 * double(k));
        term *= -ratio * inv_t;
        double m = std::abs(term);
        if (m > prev)
            break;  // divergent tail reached
        sum += term;
        prev = m;
        if (m < 1e-17 * std::abs(sum))
            break;
    }
    return sum / (2.0 * std::sqrt(kPi) * std::sqrt(zs));
}

Complex ai_impl(Complex z);

// Ai in the sector |arg z| > kConnectionArg via the rotation identity
// Ai(z) = -w*Ai(w z) - conj(w)*Ai(conj(w) z), w = exp(2 pi i/3).
Complex ai_connected(Complex z)
{
    const Complex w{-0.5, 0.8660254037844386};
    Complex a1 = ai_impl(w * z);
    Complex a2 = ai_impl(std::conj(w) * z);
    return -w * a1 - std::conj(w) * a2;
}

Complex ai_impl(Complex z)
{
    double r = std::abs(z);
    if (r <= kSeriesPlainRadius)
        return series_ai_plain(z);
    if (r <= kSeriesRadius)
        return series_ai_dd(z);
    if (std::abs(std::arg(z)) <= kConnectionArg)
    {
        Complex zs = std::sqrt(z);
        Complex t = (2.0 / 3.0) * zs * zs * zs;
        return asymptotic_ai_scaled(z) * std::exp(-t);
    }
    return ai_connected(z);
}

void check_finite_input(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("airy: non-finite argument");
}

}  // namespace

Complex airy_ai(Complex z)
{
    check_finite_input(z);
    if (std::abs(z) > 1e4)
        throw std::domain_error("airy_ai: |z| exceeds evaluation domain 1e4");
    Complex result = ai_impl(z);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw std::overflow_error("airy_ai: value not representable; use airy_ai_scaled");
    if (result == Complex{0.0, 0.0} && std::abs(z) > 15.0)
        throw std::overflow_error("airy_ai: value underflowed; use airy_ai_scaled");
    return result;
}

Complex airy_ai_scaled(Complex z)
{
    check_finite_input(z);
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw std::domain_error(
            "airy_ai_scaled: principal branch undefined on the negative real axis");

    double r = std::abs(z);
    if (r > kSeriesRadius && std::abs(std::arg(z)) <= kConnectionArg)
        return asymptotic_ai_scaled(z);

    Complex zs = std::sqrt(z);
    Complex t = (2.0 / 3.0) * zs * zs * zs;
    Complex result = ai_impl(z) * std::exp(t);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw std::overflow_error("airy_ai_scaled: value not representable");
    return result;
}

double airy_zero(int n)
{
    if (n < 1 || n > 100)
        throw std::out_of_range("airy_zero: index must be in [1, 100]");

    static std::once_flag flag;
    static std::vector<double> zeros;
    std::call_once(flag, [] {
        zeros.resize(100);
        auto ai_real = [](double x) { return airy_ai({x, 0.0}).real(); };
        for (int k = 1; k <= 100; ++k)
        {
            double seed = -std::pow(3.0 * kPi * (4 * k - 1) / 8.0, 2.0 / 3.0);
            double h = 0.2;
            double lo = seed - h;
            double hi = seed + h;
            double flo = ai_real(lo);
            double fhi = ai_real(hi);
            for (int widen = 0; widen < 6 && flo * fhi > 0.0; ++widen)
            {
                h *= 1.5;
                lo = seed - h;
                hi = seed + h;
                flo = ai_real(lo);
                fhi = ai_real(hi);
            }
            if (flo * fhi > 0.0)
                throw std::runtime_error("airy_zero: bracketing failed");
            for (int it = 0; it < 80; ++it)
            {
                double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi)
                    break;
                double fmid = ai_real(mid);
                if (flo * fmid <= 0.0)
                {
                    hi = mid;
                    fhi = fmid;
                }
                else
                {
                    lo = mid;
                    flo = fmid;
                }
            }
            zeros[k - 1] = 0.5 * (lo + hi);
        }
    });
    return zeros[n - 1];
}

Complex airy_contour_oracle(Complex z)
{
    check_finite_input(z);
    if (std::abs(z) > 30.0)
        throw std::domain_error("airy_contour_oracle: |z| exceeds 30");

    // Near the negative real axis the Gaussian damping of the central
    // segment vanishes; fall back to the rotation identity.
    if (std::abs(std::arg(z)) > 2.6 && std::abs(z) > 0.5)
    {
        const Complex w{-0.5, 0.8660254037844386};
        return -w * airy_contour_oracle(w * z) - std::conj(w) * airy_contour_oracle(std::conj(w) * z);
    }

    // Path through the saddle t0 = -sqrt(z): vertical segment
    // t = t0 + i u, |u| <= U, then outgoing rays at +-110 degrees.
    // exp offset c0 = (2/3) z^{3/2} so the saddle integrand is O(1).
    Complex zs = std::sqrt(z);
    Complex c0 = (2.0 / 3.0) * zs * zs * zs;
    Complex t0 = -zs;

    auto expo = [&](Complex t) {
        return std::exp(z * t - t * t * t / 3.0 + c0);
    };

    double u_cap = std::sqrt(45.0 / std::max(zs.real(), 0.33));
    double big_u = std::min(12.0, std::max(3.0, u_cap));

    const Complex i_unit{0.0, 1.0};
    const Complex dir_up = std::polar(1.0, 110.0 * kPi / 180.0);
    const Complex dir_dn = std::conj(dir_up);
    Complex t_up = t0 + i_unit * big_u;
    Complex t_dn = t0 - i_unit * big_u;

    const double abs_tol = 1e-12 * (1.0 + big_u);
    const double rel_tol = 1e-11;

    auto central = quad::adaptive_gk15(
        [&](double u) { return expo(t0 + i_unit * u); }, -big_u, big_u, abs_tol,
        rel_tol, 4000);

    const double v_max = 60.0;
    auto upper = quad::adaptive_gk15(
        [&](double v) { return expo(t_up + v * dir_up); }, 0.0, v_max, abs_tol,
        rel_tol, 4000);
    auto lower = quad::adaptive_gk15(
        [&](double v) { return expo(t_dn + v * dir_dn); }, 0.0, v_max, abs_tol,
        rel_tol, 4000);

    Complex total = i_unit * central.value + dir_up * upper.value - dir_dn * lower.value;
    double err = central.error + upper.error + lower.error;
    if (err > 1e-8 * std::abs(total) + 1e-11)
        throw std::runtime_error("airy_contour_oracle: path quadrature failed to converge");

    Complex scaled = total / (2.0 * kPi * i_unit);
    return scaled * std::exp(-c0);
}

}  // namespace airyscat
