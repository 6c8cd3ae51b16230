//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace airyscat::quad {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel
{
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<std::complex<double>(double)>& f,
                 double a,
                 double b)
{
    using C = std::complex<double>;
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);

    C fc = f(center);
    C result_gauss = kWg[3] * fc;
    C result_kronrod = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);

    C fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j)
    {
        double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        C fsum = fv1[j] + fv2[j];
        result_kronrod += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1)  // j = 1,3,5 are the Gauss points
            result_gauss += kWg[j / 2] * fsum;
    }

    // QUADPACK-style sharpened error estimate
    C mean = result_kronrod * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    resasc *= half;
    resabs *= half;

    double err = std::abs(result_kronrod - result_gauss) * half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, round);

    return {a, b, result_kronrod * half, err};
}

}  // namespace

Result adaptive_gk15(const std::function<std::complex<double>(double)>& f,
                     double a,
                     double b,
                     double abs_tol,
                     double rel_tol,
                     int max_intervals,
                     int initial_subdivisions)
{
    Result out;
    std::priority_queue<Panel> queue;
    int n0 = std::max(1, initial_subdivisions);
    std::complex<double> total{0.0, 0.0};
    double total_err = 0.0;
    for (int i = 0; i < n0; ++i)
    {
        double lo = a + (b - a) * i / n0;
        double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
        Panel p = eval_panel(f, lo, hi);
        out.evaluations += 15;
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }
    int n_panels = n0;

    while (n_panels < max_intervals)
    {
        double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol)
            break;
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
        {
            queue.push(worst);  // interval exhausted at machine precision
            break;
        }
        Panel left = eval_panel(f, worst.a, mid);
        Panel right = eval_panel(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++n_panels;
    }

    out.value = total;
    out.error = total_err;
    out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    return out;
}

const HermiteRule& gauss_hermite(int n)
{
    if (n < 1 || n > 512)
        throw std::invalid_argument("gauss_hermite: order out of range");

    static std::mutex mutex;
    static std::map<int, HermiteRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // Newton iteration on the Hermite recurrence, largest root first.
    HermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    double z = 0.0;
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(n, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * rule.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * rule.nodes[1];
        else
            z = 2.0 * z - rule.nodes[i - 2];

        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter)
        {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j)
            {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2
                     - std::sqrt(double(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z)))
                break;
        }
        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;

    // nodes[i] currently descend; flip to ascending order
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());

    return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace airyscat::quad
