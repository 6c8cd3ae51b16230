//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>

namespace airyscat::detail {

/// Unevaluated double-double value (hi + lo with |lo| <= ulp(hi)/2).
/// Used to push power-series accumulation past the cancellation loss that
/// plain doubles suffer at moderate |z|.
struct DDouble
{
    double hi = 0.0;
    double lo = 0.0;

    constexpr DDouble() = default;
    constexpr DDouble(double h) : hi(h) {}
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

inline DDouble two_sum(double a, double b)
{
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DDouble quick_two_sum(double a, double b)
{
    double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b)
{
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DDouble operator+(DDouble a, DDouble b)
{
    DDouble s = two_sum(a.hi, b.hi);
    double e = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, e);
}

inline DDouble operator-(DDouble a, DDouble b)
{
    DDouble s = two_sum(a.hi, -b.hi);
    double e = s.lo + a.lo - b.lo;
    return quick_two_sum(s.hi, e);
}

inline DDouble operator*(DDouble a, DDouble b)
{
    DDouble p = two_prod(a.hi, b.hi);
    double e = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, e);
}

inline DDouble operator/(DDouble a, double d)
{
    double q1 = a.hi / d;
    DDouble r = a - two_prod(q1, d);
    double q2 = (r.hi + r.lo) / d;
    return quick_two_sum(q1, q2);
}

/// Complex number with double-double components.
struct CDDouble
{
    DDouble re;
    DDouble im;

    CDDouble() = default;
    CDDouble(DDouble r, DDouble i) : re(r), im(i) {}
    CDDouble(double r, double i) : re(r), im(i) {}
};

inline CDDouble operator+(CDDouble a, CDDouble b)
{
    return {a.re + b.re, a.im + b.im};
}

inline CDDouble operator*(CDDouble a, CDDouble b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline CDDouble operator*(CDDouble a, DDouble s)
{
    return {a.re * s, a.im * s};
}

inline CDDouble operator/(CDDouble a, double d)
{
    return {a.re / d, a.im / d};
}

inline double abs_estimate(CDDouble a)
{
    return std::hypot(a.re.hi, a.im.hi);
}

}  // namespace airyscat::detail
