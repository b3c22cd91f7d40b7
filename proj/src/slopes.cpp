#include "tropic/slopes.hpp"

#include <numeric>
#include <stdexcept>

namespace tropic::slopes {

RationalDirection apply_T(const RationalDirection& xi, std::size_t h)
{
    if (xi.dim() != 2 * h)
        throw std::invalid_argument("apply_T: direction length is not 2h");
    sphdual::IntRow out(xi.dim());
    for (std::size_t i = 0; i < h; ++i)
    {
        out[2 * i] = xi.entries()[2 * i + 1];
        out[2 * i + 1] = -xi.entries()[2 * i];
    }
    return RationalDirection(std::move(out));
}

BoundaryCurveCoordinate canonicalize(std::vector<std::int64_t> v)
{
    if (v.size() % 2 != 0)
        throw std::invalid_argument("canonicalize: odd length");
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    if (g == 0)
        throw std::invalid_argument("canonicalize: zero vector");
    for (std::size_t i = 0; i < v.size(); i += 2)
    {
        v[i] /= g;
        v[i + 1] /= g;
        if (v[i] < 0 || (v[i] == 0 && v[i + 1] < 0))
        {
            v[i] = -v[i];
            v[i + 1] = -v[i + 1];
        }
    }
    BoundaryCurveCoordinate c;
    c.entries_ = std::move(v);
    return c;
}

std::set<BoundaryCurveCoordinate> detect_boundary_coordinates(const SphericalComplex& c, int height)
{
    if (c.dim() % 2 != 0)
        throw std::invalid_argument("detect_boundary_coordinates: odd number of variables");
    std::set<BoundaryCurveCoordinate> out;
    for (const auto& xi : sphdual::rational_points(c, height))
        out.insert(canonicalize(apply_T(xi, c.dim() / 2).entries()));
    return out;
}

std::string slope_of(const BoundaryCurveCoordinate& c)
{
    if (c.num_cusps() != 1)
        throw std::invalid_argument("slope_of: needs exactly one cusp");
    std::int64_t p = c.entries()[0], q = c.entries()[1];
    if (q == 0)
        return "inf";
    if (q < 0)
    {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p, q);
    return std::to_string(p / g) + "/" + std::to_string(q / g);
}

} // namespace tropic::slopes
