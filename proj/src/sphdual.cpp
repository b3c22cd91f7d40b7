#include "tropic/sphdual.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tropic/polytope.hpp"

namespace tropic::sphdual {

namespace {

IntRow difference(const ExponentVector& a, const ExponentVector& b)
{
    IntRow d(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        d[k] = checked_add(a[k], -b[k]);
    return d;
}

bool is_primitive_nonzero(const IntRow& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g == 1;
}

bool order_for_reduction(const Cell& a, const Cell& b)
{
    if (a.cone_dimension != b.cone_dimension)
        return a.cone_dimension > b.cone_dimension;
    return a.system < b.system;
}

/// Keep a cell unless an already kept cell contains it. Cells are visited
/// largest dimension first, so anything dropped is inside some kept cell.
template <class Covers>
std::vector<Cell> reduce_to_maximal(std::vector<Cell> cells, Covers covers)
{
    std::sort(cells.begin(), cells.end(), order_for_reduction);
    std::vector<Cell> kept;
    for (auto& c : cells)
    {
        bool covered = std::any_of(kept.begin(), kept.end(), [&](const Cell& k) {
            return k.system.satisfied_by(std::span<const std::int64_t>(c.interior)) && covers(k, c);
        });
        if (!covered)
            kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(), [](const Cell& a, const Cell& b) { return a.system < b.system; });
    return kept;
}

} // namespace

// ---------------------------------------------------------------------------

RationalDirection::RationalDirection(IntRow entries) : entries_(std::move(entries))
{
    if (!is_primitive_nonzero(entries_))
        throw std::invalid_argument("direction must be a nonzero primitive integer vector");
}

RationalDirection RationalDirection::from_vector(IntRow entries)
{
    return RationalDirection(exactgeom::make_primitive(std::move(entries)));
}

RationalDirection RationalDirection::operator-() const
{
    IntRow n(entries_.size());
    for (std::size_t i = 0; i < n.size(); ++i)
        n[i] = -entries_[i];
    return RationalDirection(std::move(n));
}

SphericalComplex SphericalComplex::empty(std::size_t dim)
{
    return SphericalComplex(dim, false);
}

SphericalComplex SphericalComplex::full_sphere(std::size_t dim)
{
    return SphericalComplex(dim, true);
}

SphericalComplex SphericalComplex::from_cells(std::size_t dim, std::vector<Cell> cells)
{
    for (const auto& c : cells)
        if (c.system.dim() != dim)
            throw std::invalid_argument("cell dimension does not match complex");
    SphericalComplex out(dim, false);
    out.cells_ = reduce_to_maximal(std::move(cells), [](const Cell& outer, const Cell& inner) {
        return exactgeom::cone_contains(outer.system, inner.system);
    });
    return out;
}

LinearSystem pair_cone(std::span<const ExponentVector> points, const ExponentVector& alpha0,
                       const ExponentVector& alpha1)
{
    if (alpha0 == alpha1)
        throw std::invalid_argument("pair_cone: the two points must differ");
    const std::size_t m = alpha0.size();
    std::vector<IntRow> eq{difference(alpha0, alpha1)};
    std::vector<IntRow> ineq;
    ineq.reserve(2 * points.size());
    for (const auto& a : points)
    {
        if (a.size() != m)
            throw std::invalid_argument("pair_cone: point dimension mismatch");
        ineq.push_back(difference(alpha0, a));
        ineq.push_back(difference(alpha1, a));
    }
    return LinearSystem(m, std::move(eq), std::move(ineq));
}

std::optional<Cell> make_cell(const LinearSystem& system)
{
    auto analysis = exactgeom::analyze_cone(system);
    if (analysis.dimension == 0)
        return std::nullopt;
    return Cell{exactgeom::promote_implicit_equalities(system, analysis), analysis.dimension,
                exactgeom::primitive_integer_vector(*analysis.interior_point)};
}

SphericalComplex spherical_dual(const LaurentPolynomial& f, unsigned threads)
{
    const std::size_t m = f.num_variables();
    if (f.is_zero())
        return SphericalComplex::full_sphere(m);

    auto points = support(f);
    SphericalComplex out(m, false);
    out.support_ = points;
    if (points.size() == 1)
        return out;

    auto vertices = polytope::extreme_points(points);

    // Points interior to a full-dimensional hull have a zero normal cone and
    // cannot take part in a nonzero pair cone.
    std::vector<ExponentVector> candidates;
    for (const auto& p : points)
    {
        if (std::binary_search(vertices.begin(), vertices.end(), p))
        {
            candidates.push_back(p);
            continue;
        }
        std::vector<IntRow> rows;
        for (const auto& v : vertices)
            rows.push_back(difference(p, v));
        if (exactgeom::cone_dimension(LinearSystem(m, {}, std::move(rows))) > 0)
            candidates.push_back(p);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            pairs.emplace_back(i, j);

    std::vector<std::optional<Cell>> results(pairs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k)
        {
            const auto& a0 = candidates[pairs[k].first];
            const auto& a1 = candidates[pairs[k].second];
            auto rows = vertices;
            rows.push_back(a0);
            rows.push_back(a1);
            results[k] = make_cell(pair_cone(rows, a0, a1));
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    if (threads == 1)
    {
        work(0, pairs.size());
    }
    else
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (pairs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, std::min(pairs.size(), t * chunk), std::min(pairs.size(), (t + 1) * chunk));
    }

    std::vector<Cell> cells;
    for (auto& r : results)
        if (r)
            cells.push_back(std::move(*r));

    // All pair cones are normal cones of faces of one polytope, so they form
    // a fan: a relative-interior point of one cone inside another already
    // implies containment.
    out.cells_ = reduce_to_maximal(std::move(cells), [](const Cell&, const Cell&) { return true; });
    return out;
}

bool attains_max_twice(std::span<const ExponentVector> points, std::span<const std::int64_t> xi)
{
    bool have = false;
    __int128 best = 0;
    int count = 0;
    for (const auto& a : points)
    {
        __int128 v = 0;
        for (std::size_t k = 0; k < xi.size(); ++k)
            v += static_cast<__int128>(a[k]) * xi[k];
        if (!have || v > best)
        {
            best = v;
            count = 1;
            have = true;
        }
        else if (v == best)
        {
            ++count;
        }
    }
    return count >= 2;
}

bool cells_contain(const SphericalComplex& c, std::span<const std::int64_t> xi)
{
    if (xi.size() != c.dim())
        throw std::invalid_argument("direction dimension does not match complex");
    if (c.is_full_sphere())
        return true;
    return std::any_of(c.cells().begin(), c.cells().end(),
                       [&](const Cell& cell) { return cell.system.satisfied_by(xi); });
}

bool contains(const SphericalComplex& c, const RationalDirection& xi)
{
    if (xi.dim() != c.dim())
        throw std::invalid_argument("direction dimension does not match complex");
    if (c.is_full_sphere())
        return true;
    if (c.defining_support())
        return attains_max_twice(*c.defining_support(), xi.entries());
    return cells_contain(c, xi.entries());
}

SphericalComplex unite(const SphericalComplex& a, const SphericalComplex& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("unite: ambient dimensions differ");
    if (a.is_full_sphere() || b.is_full_sphere())
        return SphericalComplex::full_sphere(a.dim());
    std::vector<Cell> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return SphericalComplex::from_cells(a.dim(), std::move(cells));
}

SphericalComplex intersect(const SphericalComplex& a, const SphericalComplex& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("intersect: ambient dimensions differ");
    if (a.is_full_sphere())
        return b;
    if (b.is_full_sphere())
        return a;
    std::vector<Cell> cells;
    for (const auto& x : a.cells())
        for (const auto& y : b.cells())
            if (auto c = make_cell(exactgeom::intersect(x.system, y.system)))
                cells.push_back(std::move(*c));
    return SphericalComplex::from_cells(a.dim(), std::move(cells));
}

std::vector<RationalDirection> primitive_directions(std::size_t dim, int height)
{
    if (height < 1)
        throw std::invalid_argument("height must be at least 1");
    std::vector<RationalDirection> out;
    if (dim == 0)
        return out;
    IntRow v(dim, -height);
    for (;;)
    {
        if (is_primitive_nonzero(v))
            out.emplace_back(v);
        std::size_t k = dim;
        while (k > 0 && v[k - 1] == height)
        {
            v[k - 1] = -height;
            --k;
        }
        if (k == 0)
            break;
        ++v[k - 1];
    }
    return out;
}

std::vector<RationalDirection> rational_points(const SphericalComplex& c, int height)
{
    std::vector<RationalDirection> out;
    if (c.is_empty())
        return out;
    for (auto& d : primitive_directions(c.dim(), height))
        if (contains(c, d))
            out.push_back(std::move(d));
    return out;
}

std::optional<int> max_cell_dimension(const SphericalComplex& c)
{
    if (c.is_full_sphere())
        return static_cast<int>(c.dim()) - 1;
    if (c.cells().empty())
        return std::nullopt;
    int best = 0;
    for (const auto& cell : c.cells())
        best = std::max(best, cell.cone_dimension);
    return best - 1;
}

std::vector<RationalDirection> ray_generators(const SphericalComplex& c)
{
    if (c.is_full_sphere())
        throw std::domain_error("ray_generators: full sphere has no ray cells");
    std::vector<RationalDirection> out;
    for (const auto& cell : c.cells())
    {
        if (cell.cone_dimension != 1)
            throw std::domain_error("ray_generators: cell of dimension > 1");
        RationalDirection r(cell.interior);
        auto opposite = -r;
        out.push_back(r);
        if (cell.system.satisfied_by(std::span<const std::int64_t>(opposite.entries())))
            out.push_back(opposite);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tropic::sphdual
