#include "tropic/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropic/exactgeom.hpp"

namespace tropic::polytope {

using exactgeom::RationalMatrix;
using exactgeom::RationalVector;

std::vector<ExponentVector> extreme_points(std::vector<ExponentVector> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2)
        return points;

    const std::size_t m = points.front().size();
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        // Look for xi with (p_i - p_j) . xi >= 1 for all j != i.
        RationalMatrix rows;
        for (std::size_t j = 0; j < points.size(); ++j)
        {
            if (j == i)
                continue;
            RationalVector r(m);
            for (std::size_t k = 0; k < m; ++k)
                r[k] = Rational(checked_add(points[i][k], -points[j][k]));
            rows.push_back(std::move(r));
        }
        RationalVector rhs(rows.size(), Rational(1));
        if (exactgeom::find_feasible(rows, rhs, m))
            out.push_back(points[i]);
    }
    return out;
}

LatticePolytope LatticePolytope::empty(std::size_t dim)
{
    return LatticePolytope(dim, true, {});
}

LatticePolytope LatticePolytope::hull(std::size_t dim, std::vector<ExponentVector> points)
{
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("point dimension does not match ambient dimension");
    if (points.empty())
        return empty(dim);
    return LatticePolytope(dim, false, extreme_points(std::move(points)));
}

LatticePolytope newton_polytope(const LaurentPolynomial& f)
{
    return LatticePolytope::hull(f.num_variables(), support(f));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.dim() != q.dim())
        throw std::invalid_argument("minkowski_sum: ambient dimensions differ");
    if (p.is_empty() || q.is_empty())
        return LatticePolytope::empty(p.dim());
    std::vector<ExponentVector> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
    {
        for (const auto& b : q.vertices())
        {
            ExponentVector s(a.size());
            for (std::size_t k = 0; k < a.size(); ++k)
                s[k] = checked_add(a[k], b[k]);
            sums.push_back(std::move(s));
        }
    }
    return LatticePolytope::hull(p.dim(), std::move(sums));
}

std::optional<int> dimension(const LatticePolytope& p)
{
    if (p.is_empty())
        return std::nullopt;
    const auto& v = p.vertices();
    RationalMatrix diffs;
    for (std::size_t i = 1; i < v.size(); ++i)
    {
        RationalVector d(p.dim());
        for (std::size_t k = 0; k < p.dim(); ++k)
            d[k] = Rational(checked_add(v[i][k], -v[0][k]));
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(exactgeom::rank(std::move(diffs), p.dim()));
}

} // namespace tropic::polytope
