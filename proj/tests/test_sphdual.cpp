#include "doctest.h"

#include <random>

#include "random_poly.hpp"
#include "tropic/polytope.hpp"
#include "tropic/sphdual.hpp"

using namespace tropic;
using namespace tropic::sphdual;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> ml{"m", "l"};

using Dirs = std::vector<RationalDirection>;

RationalDirection dir(IntRow v)
{
    return RationalDirection(std::move(v));
}

// Brute-force filter of primitive directions by the max-attained-twice rule,
// written independently of the library's own test.
Dirs brute_force_points(const LaurentPolynomial& f, int height)
{
    auto pts = support(f);
    Dirs out;
    for (const auto& d : primitive_directions(f.num_variables(), height))
    {
        std::vector<long long> values;
        for (const auto& p : pts)
        {
            long long v = 0;
            for (std::size_t k = 0; k < p.size(); ++k)
                v += p[k] * d.entries()[k];
            values.push_back(v);
        }
        std::sort(values.rbegin(), values.rend());
        if (values.size() >= 2 && values[0] == values[1])
            out.push_back(d);
    }
    return out;
}

} // namespace

TEST_CASE("RationalDirection requires primitive nonzero entries")
{
    CHECK_THROWS_AS(dir({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(dir({0, 0}), std::invalid_argument);
    CHECK(RationalDirection::from_vector({-2, 4}).entries() == IntRow{-1, 2});
}

TEST_CASE("pair_cone examples")
{
    auto tri = support(parse("x+y+1", xy));
    auto c = pair_cone(tri, {1, 0}, {0, 1});
    auto a = exactgeom::analyze_cone(c);
    CHECK(a.dimension == 1);
    CHECK(exactgeom::primitive_integer_vector(*a.interior_point) == IntRow{1, 1});

    auto seg = support(parse("l*m^6+1", ml));
    auto line = pair_cone(seg, {6, 1}, {0, 0});
    CHECK(line.equalities() == std::vector<IntRow>{{6, 1}});
    CHECK(line.inequalities().empty());
    CHECK(exactgeom::cone_dimension(line) == 1);
    CHECK(line.satisfied_by(std::vector<std::int64_t>{1, -6}));
    CHECK(line.satisfied_by(std::vector<std::int64_t>{-1, 6}));

    CHECK_THROWS_AS(pair_cone(tri, {1, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("property: pair cones are symmetric in the pair")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial)
    {
        auto f = testing::random_polynomial(rng, {static_cast<std::size_t>(2 + trial % 2), 6, 3, 3});
        auto pts = support(f);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                CHECK(pair_cone(pts, pts[i], pts[j]) == pair_cone(pts, pts[j], pts[i]));
    }
}

TEST_CASE("spherical_dual examples")
{
    auto tri = spherical_dual(parse("x+y+1", xy));
    CHECK(tri.cells().size() == 3);
    CHECK(ray_generators(tri) == Dirs{dir({-1, 0}), dir({0, -1}), dir({1, 1})});

    auto seg = spherical_dual(parse("l*m^6+1", ml));
    CHECK(seg.cells().size() == 1);
    CHECK(ray_generators(seg) == Dirs{dir({-1, 6}), dir({1, -6})});

    auto mono = spherical_dual(parse("5*x^2*y^-1", xy));
    CHECK(mono.is_empty());
    CHECK_FALSE(mono.is_full_sphere());

    auto zero = spherical_dual(LaurentPolynomial(xy));
    CHECK(zero.is_full_sphere());
    CHECK(zero.cells().empty());
}

TEST_CASE("contains examples")
{
    auto tri = spherical_dual(parse("x+y+1", xy));
    CHECK(contains(tri, dir({1, 1})));
    CHECK_FALSE(contains(tri, dir({1, 0})));
    CHECK(cells_contain(tri, dir({1, 1}).entries()));
    CHECK_FALSE(cells_contain(tri, dir({1, 0}).entries()));
    auto full = SphericalComplex::full_sphere(2);
    CHECK(contains(full, dir({3, -7})));
    CHECK_THROWS_AS(contains(tri, dir({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("union and intersection examples")
{
    auto a = spherical_dual(parse("x-1", xy));
    auto b = spherical_dual(parse("y-1", xy));
    CHECK(intersect(a, b).is_empty());

    auto tri = spherical_dual(parse("x+y+1", xy));
    auto e = SphericalComplex::empty(2);
    auto u = unite(tri, e);
    CHECK(u.cells().size() == tri.cells().size());
    for (std::size_t i = 0; i < u.cells().size(); ++i)
        CHECK(u.cells()[i].system == tri.cells()[i].system);

    auto diag = intersect(tri, spherical_dual(parse("x-y", xy)));
    CHECK(ray_generators(diag) == Dirs{dir({1, 1})});

    auto full = SphericalComplex::full_sphere(2);
    CHECK(intersect(full, tri).cells().size() == 3);
    CHECK(unite(full, tri).is_full_sphere());
}

TEST_CASE("union drops cells contained in other cells")
{
    // The ray (1,1) lies on the line x = y.
    auto line = spherical_dual(parse("x-y", xy));
    auto tri = spherical_dual(parse("x+y+1", xy));
    auto u = unite(line, tri);
    CHECK(u.cells().size() == 3);
    CHECK(rational_points(u, 3) == Dirs{dir({-1, -1}), dir({-1, 0}), dir({0, -1}), dir({1, 1})});
}

TEST_CASE("rational_points examples")
{
    auto tri = spherical_dual(parse("x+y+1", xy));
    auto expected = brute_force_points(parse("x+y+1", xy), 2);
    CHECK(expected == Dirs{dir({-1, 0}), dir({0, -1}), dir({1, 1})});
    CHECK(rational_points(tri, 2) == expected);
    CHECK(rational_points(SphericalComplex::empty(2), 5).empty());
    auto all = rational_points(SphericalComplex::full_sphere(2), 1);
    CHECK(all.size() == 8);
}

TEST_CASE("max_cell_dimension examples")
{
    CHECK(max_cell_dimension(spherical_dual(parse("x+y+1", xy))) == 0);
    CHECK(max_cell_dimension(spherical_dual(parse("x+y+z+1", xyz))) == 1);
    CHECK_FALSE(max_cell_dimension(SphericalComplex::empty(3)).has_value());
    CHECK(max_cell_dimension(SphericalComplex::full_sphere(3)) == 2);
}

TEST_CASE("tetrahedron dual has six arcs")
{
    auto c = spherical_dual(parse("x+y+z+1", xyz));
    CHECK(c.cells().size() == 6);
    for (const auto& cell : c.cells())
        CHECK(cell.cone_dimension == 2);
}

TEST_CASE("property: cell membership agrees with the support test")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial)
    {
        auto f = testing::random_polynomial(rng, {static_cast<std::size_t>(1 + trial % 3), 6, 4, 5});
        auto c = spherical_dual(f);
        auto pts = support(f);
        for (const auto& d : primitive_directions(f.num_variables(), 5))
            CHECK(cells_contain(c, d.entries()) == attains_max_twice(pts, d.entries()));
    }
}

TEST_CASE("property: Sph(fg) = Sph(f) u Sph(g)")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial)
    {
        testing::RandomPolySpec spec{static_cast<std::size_t>(2 + trial % 2), 4, 3, 5};
        auto f = testing::random_polynomial(rng, spec);
        auto g = testing::random_polynomial(rng, spec);
        auto cf = spherical_dual(f), cg = spherical_dual(g), cfg = spherical_dual(mul(f, g));
        for (const auto& d : primitive_directions(f.num_variables(), 4))
            CHECK(cells_contain(cfg, d.entries()) ==
                  (cells_contain(cf, d.entries()) || cells_contain(cg, d.entries())));
    }
}

TEST_CASE("property: hypersurface duals have cells of dimension m - 2")
{
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 10)
    {
        const std::size_t m = 2 + done % 2;
        auto f = testing::random_polynomial(rng, {m, 6, 3, 5});
        if (polytope::dimension(polytope::newton_polytope(f)) != static_cast<int>(m))
            continue;
        CHECK(max_cell_dimension(spherical_dual(f)) == static_cast<int>(m) - 2);
        ++done;
    }
}

TEST_CASE("threaded enumeration gives the same complex")
{
    auto f = parse("(x+y+z+1)*(x*y - z^2 + 3)", xyz);
    auto a = spherical_dual(f, 1), b = spherical_dual(f, 3);
    REQUIRE(a.cells().size() == b.cells().size());
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        CHECK(a.cells()[i].system == b.cells()[i].system);
}
