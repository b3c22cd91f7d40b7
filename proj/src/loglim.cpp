#include "tropic/loglim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tropic/roots.hpp"

namespace tropic::loglim {

using roots::WideComplex;
using roots::WideFloat;

SphericalComplex loglim_principal(const LaurentPolynomial& f, unsigned threads)
{
    return sphdual::spherical_dual(f, threads);
}

OuterApproximation loglim_outer(std::span<const LaurentPolynomial> generators, unsigned threads)
{
    if (generators.empty())
        throw std::invalid_argument("loglim_outer: no generators");
    const auto& vars = generators.front().variables();
    for (const auto& g : generators)
        if (g.variables() != vars)
            throw std::invalid_argument("loglim_outer: generators use different variable lists");

    OuterApproximation out{SphericalComplex::full_sphere(vars.size()), true};
    for (const auto& g : generators)
    {
        if (g.is_zero())
            continue;
        out.all_generators_zero = false;
        out.complex = sphdual::intersect(out.complex, sphdual::spherical_dual(g, threads));
    }
    return out;
}

namespace {

/// Coefficients, in the solved variable, of f with the other variable fixed
/// at exp(log_modulus + i*angle). Index 0 is the lowest exponent present.
std::vector<WideComplex> specialize(const LaurentPolynomial& f, std::size_t fixed, double log_modulus, double angle)
{
    const std::size_t solved = 1 - fixed;
    Exponent lowest = std::numeric_limits<Exponent>::max(), highest = std::numeric_limits<Exponent>::min();
    for (const auto& [e, c] : f.terms())
    {
        lowest = std::min(lowest, e[solved]);
        highest = std::max(highest, e[solved]);
    }
    std::vector<WideComplex> coeffs(static_cast<std::size_t>(highest - lowest) + 1, WideComplex(0));
    for (const auto& [e, c] : f.terms())
    {
        const double k = static_cast<double>(e[fixed]);
        WideFloat modulus = exp(WideFloat(log_modulus) * k) * WideFloat(c.convert_to<double>());
        double phase = std::remainder(angle * k, 2 * std::numbers::pi);
        coeffs[static_cast<std::size_t>(e[solved] - lowest)] +=
            WideComplex(modulus * std::cos(phase), modulus * std::sin(phase));
    }
    return coeffs;
}

double uniform_angle(std::mt19937_64& rng)
{
    return 2 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

SampleRun sample_loglim(const LaurentPolynomial& f, const SamplingParams& params)
{
    if (f.num_variables() != 2)
        throw std::invalid_argument("sample_loglim: sampling needs exactly two variables");
    if (f.num_terms() < 2)
        throw std::invalid_argument("sample_loglim: a monomial has no zeros in the torus");
    if (params.grid < 1 || params.phases < 1)
        throw std::invalid_argument("sample_loglim: grid and phases must be positive");
    if (!(params.log_rho_min <= params.log_rho_max))
        throw std::invalid_argument("sample_loglim: empty magnitude range");

    std::mt19937_64 rng(params.seed);
    SampleRun run;
    const double step = params.grid > 1 ? (params.log_rho_max - params.log_rho_min) / (params.grid - 1) : 0.0;
    for (int g = 0; g < params.grid; ++g)
    {
        const double s = params.log_rho_min + step * g;
        for (int sweep = 0; sweep < 2; ++sweep)
        {
            for (int k = 0; k < params.phases; ++k)
            {
                const double angle = uniform_angle(rng);
                auto solved = roots::aberth_roots(specialize(f, static_cast<std::size_t>(sweep), s, angle),
                                                  params.root_tolerance);
                if (!solved.converged)
                {
                    run.skipped.push_back({g, sweep, k});
                    continue;
                }
                std::vector<std::pair<double, double>> logs;
                for (const auto& z : solved.roots)
                    logs.emplace_back(static_cast<double>(log(abs(z))), static_cast<double>(arg(z)));
                std::sort(logs.begin(), logs.end());
                for (const auto& [log_root, unused] : logs)
                {
                    double v[2];
                    v[sweep] = s;
                    v[1 - sweep] = log_root;
                    const double norm = std::hypot(v[0], v[1]);
                    if (norm == 0.0)
                        continue;
                    run.points.push_back(
                        {{v[0] / norm, v[1] / norm}, std::sqrt(1.0 + norm * norm), s, g, sweep, k});
                }
            }
        }
    }
    return run;
}

double spherical_distance(std::span<const double> a, std::span<const double> b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] * b[i];
    return std::acos(std::clamp(d, -1.0, 1.0));
}

std::vector<double> unit_vector(const sphdual::RationalDirection& d)
{
    std::vector<double> v;
    double norm = 0.0;
    for (auto x : d.entries())
    {
        v.push_back(static_cast<double>(x));
        norm += v.back() * v.back();
    }
    norm = std::sqrt(norm);
    for (auto& x : v)
        x /= norm;
    return v;
}

double distance_to_complex(const SphericalComplex& c, std::span<const double> direction)
{
    if (c.is_full_sphere())
        return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : sphdual::ray_generators(c))
        best = std::min(best, spherical_distance(direction, unit_vector(r)));
    return best;
}

std::vector<Cluster> accumulation_clusters(std::span<const SamplePoint> points, double threshold)
{
    std::vector<double> magnitudes;
    for (const auto& p : points)
        magnitudes.push_back(std::abs(p.grid_log_magnitude));
    std::sort(magnitudes.begin(), magnitudes.end());
    magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());

    std::vector<std::size_t> order;
    if (!magnitudes.empty())
    {
        const double cutoff = magnitudes[magnitudes.size() - (magnitudes.size() + 9) / 10];
        for (std::size_t i = 0; i < points.size(); ++i)
            if (std::abs(points[i].grid_log_magnitude) >= cutoff)
                order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a].radius > points[b].radius; });

    struct Seeded
    {
        std::vector<double> seed, sum;
        std::size_t size = 0;
    };
    std::vector<Seeded> clusters;
    for (auto i : order)
    {
        const auto& d = points[i].direction;
        auto it = std::find_if(clusters.begin(), clusters.end(),
                               [&](const Seeded& c) { return spherical_distance(c.seed, d) <= threshold; });
        if (it == clusters.end())
        {
            clusters.push_back({d, std::vector<double>(d.size(), 0.0), 0});
            it = std::prev(clusters.end());
        }
        for (std::size_t k = 0; k < d.size(); ++k)
            it->sum[k] += d[k];
        ++it->size;
    }

    std::vector<Cluster> out;
    for (auto& c : clusters)
    {
        double norm = 0.0;
        for (auto x : c.sum)
            norm += x * x;
        norm = std::sqrt(norm);
        for (auto& x : c.sum)
            x /= norm;
        out.push_back({std::move(c.sum), c.size});
    }
    std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.center < b.center; });
    return out;
}

ConsistencyReport check_consistency(const SphericalComplex& c, std::span<const SamplePoint> points,
                                    double min_radius, double tolerance)
{
    ConsistencyReport report;
    std::vector<const SamplePoint*> far;
    for (const auto& p : points)
    {
        if (p.radius < min_radius)
            continue;
        far.push_back(&p);
        report.worst_sample_distance = std::max(report.worst_sample_distance, distance_to_complex(c, p.direction));
    }
    report.samples_checked = far.size();

    if (!c.is_full_sphere())
    {
        for (const auto& r : sphdual::ray_generators(c))
        {
            auto u = unit_vector(r);
            double gap = std::numeric_limits<double>::infinity();
            for (const auto* p : far)
                gap = std::min(gap, spherical_distance(u, p->direction));
            report.worst_ray_gap = std::max(report.worst_ray_gap, gap);
        }
    }
    report.passed = report.samples_checked > 0 && report.worst_sample_distance <= tolerance &&
                    report.worst_ray_gap <= tolerance;
    return report;
}

} // namespace tropic::loglim
