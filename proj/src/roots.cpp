#include "tropic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tropic::roots {

namespace {

bool is_zero(const WideComplex& c)
{
    return real(c) == 0 && imag(c) == 0;
}

struct HullPoint
{
    int index;
    WideFloat log_modulus;
};

/// Upper convex hull of (j, log|c_j|) over the nonzero coefficients.
std::vector<HullPoint> upper_hull(const std::vector<WideComplex>& c)
{
    std::vector<HullPoint> hull;
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
    {
        if (is_zero(c[j]))
            continue;
        HullPoint p{j, log(abs(c[j]))};
        while (hull.size() >= 2)
        {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // Drop b if it lies on or below the segment a-p.
            WideFloat cross = (b.log_modulus - a.log_modulus) * (p.index - a.index) -
                              (p.log_modulus - a.log_modulus) * (b.index - a.index);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(std::move(p));
    }
    return hull;
}

std::vector<WideComplex> starting_points(const std::vector<WideComplex>& c)
{
    const int degree = static_cast<int>(c.size()) - 1;
    auto hull = upper_hull(c);
    std::vector<WideComplex> z;
    const double sigma = 0.7;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s)
    {
        const int k = hull[s + 1].index - hull[s].index;
        WideFloat radius = exp((hull[s].log_modulus - hull[s + 1].log_modulus) / k);
        for (int q = 0; q < k; ++q)
        {
            double angle = 2 * std::numbers::pi * q / k + 2 * std::numbers::pi * hull[s].index / degree + sigma;
            z.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
        }
    }
    return z;
}

} // namespace

void evaluate(const std::vector<WideComplex>& c, const WideComplex& z, WideComplex& value, WideComplex& derivative)
{
    value = c.back();
    derivative = WideComplex(0);
    for (std::size_t j = c.size() - 1; j-- > 0;)
    {
        derivative = derivative * z + value;
        value = value * z + c[j];
    }
}

RootResult aberth_roots(std::vector<WideComplex> c, double relative_tolerance, int max_iterations)
{
    RootResult result;
    while (!c.empty() && is_zero(c.back()))
        c.pop_back();
    auto first = std::find_if(c.begin(), c.end(), [](const WideComplex& x) { return !is_zero(x); });
    c.erase(c.begin(), first);
    if (c.size() <= 1)
    {
        result.converged = true;
        return result;
    }

    const std::size_t n = c.size() - 1;
    if (n == 1)
    {
        result.roots.push_back(-c[0] / c[1]);
        result.converged = true;
        return result;
    }

    auto z = starting_points(c);
    std::vector<bool> done(n, false);
    const WideFloat tol = relative_tolerance;
    WideComplex value, derivative;
    for (int it = 1; it <= max_iterations; ++it)
    {
        result.iterations = it;
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (done[i])
                continue;
            evaluate(c, z[i], value, derivative);
            if (is_zero(value))
            {
                done[i] = true;
                continue;
            }
            WideComplex newton = value / derivative;
            WideComplex repulsion(0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    repulsion += WideComplex(1) / (z[i] - z[j]);
            WideComplex step = newton / (WideComplex(1) - newton * repulsion);
            z[i] -= step;
            if (abs(step) <= tol * abs(z[i]))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done)
        {
            result.converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
            break;
        }
    }
    result.roots = std::move(z);
    return result;
}

} // namespace tropic::roots
