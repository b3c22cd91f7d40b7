#include "doctest.h"

#include <random>

#include "tropic/exactgeom.hpp"
#include "tropic/sphdual.hpp"

using namespace tropic;
using namespace tropic::exactgeom;

namespace {

// Brute-force dimension: rank of the span of all primitive integer vectors of
// height <= 6 satisfying the system. Exact for cones whose generators have
// height <= 6.
int brute_force_dimension(const LinearSystem& s)
{
    RationalMatrix members;
    for (const auto& d : sphdual::primitive_directions(s.dim(), 6))
        if (s.satisfied_by(std::span<const std::int64_t>(d.entries())))
            members.push_back(to_rational(d.entries()));
    return static_cast<int>(rank(members, s.dim()));
}

} // namespace

TEST_CASE("canonical row form")
{
    LinearSystem s(2, {{-2, 4}, {1, -2}}, {{3, 0}, {0, 0}, {1, 0}, {0, 2}, {0, -5}});
    CHECK(s.equalities() == std::vector<IntRow>{{0, 1}, {1, -2}});
    CHECK(s.inequalities() == std::vector<IntRow>{{1, 0}});
    CHECK(s == LinearSystem(2, {{0, 7}, {3, -6}}, {{1, 0}}));
    CHECK_THROWS_AS(LinearSystem(2, {{1, 2, 3}}, {}), std::invalid_argument);
}

TEST_CASE("cone_dimension examples")
{
    CHECK(cone_dimension(LinearSystem(2, {}, {{1, 0}, {-1, 0}, {0, 1}})) == 1);
    CHECK(cone_dimension(LinearSystem(2, {}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})) == 0);
    CHECK(cone_dimension(LinearSystem::whole_space(3)) == 3);
    CHECK(cone_dimension(LinearSystem(2, {}, {{1, 0}, {0, 1}, {-1, -1}})) == 0);
    CHECK(cone_dimension(LinearSystem(3, {}, {{1, 0, 0}, {0, 1, 0}})) == 3);
}

TEST_CASE("interior_point examples")
{
    auto ray = interior_point(LinearSystem(2, {}, {{1, 0}, {-1, 0}, {0, 1}}));
    REQUIRE(ray);
    CHECK(primitive_integer_vector(*ray) == IntRow{0, 1});

    CHECK_FALSE(interior_point(LinearSystem(2, {}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));

    auto half = interior_point(LinearSystem(2, {}, {{1, 0}}));
    REQUIRE(half);
    CHECK((*half)[0] > 0);

    auto line = interior_point(LinearSystem(2, {{6, 1}}, {}));
    REQUIRE(line);
    CHECK(LinearSystem(2, {{6, 1}}, {}).satisfied_by(*line));
}

TEST_CASE("intersect examples")
{
    LinearSystem s(2, {}, {{1, 0}, {0, 1}});
    CHECK(intersect(s, LinearSystem::whole_space(2)) == s);
    CHECK(cone_dimension(intersect(LinearSystem(2, {{1, 0}}, {}), LinearSystem(2, {{0, 1}}, {}))) == 0);
    CHECK(cone_dimension(intersect(LinearSystem(2, {{6, 1}}, {}), LinearSystem(2, {{1, -1}}, {}))) == 0);
    CHECK_THROWS_AS(intersect(s, LinearSystem(3)), std::invalid_argument);
}

TEST_CASE("find_feasible returns exact solutions")
{
    RationalMatrix rows{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}, {Rational(-1), Rational(0)}};
    RationalVector rhs{Rational(2), Rational(0), Rational(-5)};
    auto x = find_feasible(rows, rhs, 2);
    REQUIRE(x);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i][0] * (*x)[0] + rows[i][1] * (*x)[1] >= rhs[i]);

    RationalMatrix bad{{Rational(1)}, {Rational(-1)}};
    CHECK_FALSE(find_feasible(bad, {Rational(1), Rational(0)}, 1));
}

TEST_CASE("cone_contains")
{
    LinearSystem quadrant(2, {}, {{1, 0}, {0, 1}});
    LinearSystem diagonal(2, {{1, -1}}, {{1, 0}});
    CHECK(cone_contains(quadrant, diagonal));
    CHECK_FALSE(cone_contains(diagonal, quadrant));
    CHECK(cone_contains(LinearSystem::whole_space(2), quadrant));
    CHECK(cone_contains(quadrant, LinearSystem(2, {{1, 0}, {0, 1}}, {})));
}

TEST_CASE("property: dimension and interior points against brute force")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 300; ++trial)
    {
        const std::size_t m = 2 + trial % 2;
        std::vector<IntRow> eq, ineq;
        int n_eq = trial % 5 == 0 ? 1 : 0;
        int n_ineq = 1 + trial % 5;
        for (int i = 0; i < n_eq + n_ineq; ++i)
        {
            IntRow r(m);
            for (auto& v : r)
                v = entry(rng);
            (i < n_eq ? eq : ineq).push_back(r);
        }
        LinearSystem s(m, eq, ineq);
        auto a = analyze_cone(s);
        CHECK(a.dimension == brute_force_dimension(s));
        CHECK(cone_dimension(intersect(s, s)) == a.dimension);
        if (a.interior_point)
        {
            CHECK(s.satisfied_by(*a.interior_point));
            for (std::size_t i = 0; i < s.inequalities().size(); ++i)
            {
                Rational v = 0;
                for (std::size_t k = 0; k < m; ++k)
                    v += Rational(s.inequalities()[i][k]) * (*a.interior_point)[k];
                CHECK((v > 0) == !a.implicit_equality[i]);
            }
        }
        else
        {
            CHECK(a.dimension == 0);
        }
    }
}
