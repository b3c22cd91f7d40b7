#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "tropic/cli.hpp"
#include "tropic/json_io.hpp"
#include "tropic/knots.hpp"
#include "tropic/polytope.hpp"
#include "tropic/slopes.hpp"

using namespace tropic;
using namespace tropic::cli;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> ml{"m", "l"};

std::vector<LaurentPolynomial> gens(std::string_view text, const std::vector<std::string>& vars = xy)
{
    return parse_generators(text, vars);
}

} // namespace

TEST_CASE("parse_variable_list")
{
    CHECK(parse_variable_list("m, l") == ml);
    CHECK_THROWS_AS(parse_variable_list("x,,y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variable_list("x,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variable_list(""), std::invalid_argument);
}

TEST_CASE("parse_generators skips comments and blank lines")
{
    auto g = gens("# header\n\nx+y+1  # trailing\n  x-y\n");
    REQUIRE(g.size() == 2);
    CHECK(g[0] == parse("x+y+1", xy));
    CHECK(g[1] == parse("x-y", xy));
    try
    {
        gens("x+1\nx+z\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("parse_log_magnitude")
{
    CHECK(parse_log_magnitude("e^10") == 10.0);
    CHECK(parse_log_magnitude("e^-2.5") == -2.5);
    CHECK(std::abs(parse_log_magnitude("100") - std::log(100.0)) < 1e-15);
    CHECK_THROWS_AS(parse_log_magnitude("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_log_magnitude("e^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_log_magnitude("12abc"), std::invalid_argument);
}

TEST_CASE("TROPIC_THREADS")
{
    unsetenv("TROPIC_THREADS");
    CHECK(threads_from_environment() == 1);
    setenv("TROPIC_THREADS", "4", 1);
    CHECK(threads_from_environment() == 4);
    setenv("TROPIC_THREADS", "four", 1);
    CHECK_THROWS_AS(threads_from_environment(), std::invalid_argument);
    unsetenv("TROPIC_THREADS");
}

TEST_CASE("golden: newton")
{
    auto g = gens("x+y+1\n0\n");
    CHECK(cmd_newton(g) == "{\"dim\":2,\"empty\":false,\"vertices\":[[0,0],[0,1],[1,0]]}\n"
                           "{\"dim\":2,\"empty\":true,\"vertices\":[]}\n");
    CHECK(polytope::newton_polytope(g[0]).vertices() == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("golden: sphdual of x+y+1 has three ray cells")
{
    auto g = gens("x+y+1");
    const std::string want = "{\"dim\":2,\"full_sphere\":false,\"cells\":["
                             "{\"eq\":[[0,1]],\"ineq\":[[-1,0],[-1,1]]},"
                             "{\"eq\":[[1,-1]],\"ineq\":[[0,1],[1,0]]},"
                             "{\"eq\":[[1,0]],\"ineq\":[[0,-1],[1,-1]]}]}\n";
    CHECK(cmd_sphdual(g) == want);
    CHECK(cmd_sphdual(g, 3) == want);
    auto c = sphdual::spherical_dual(g[0]);
    CHECK(c.cells().size() == 3);
    CHECK(sphdual::ray_generators(c) == std::vector<sphdual::RationalDirection>{
                                            sphdual::RationalDirection({-1, 0}), sphdual::RationalDirection({0, -1}),
                                            sphdual::RationalDirection({1, 1})});
    CHECK(cmd_sphdual(gens("0")) == "{\"dim\":2,\"full_sphere\":true,\"cells\":[]}\n");
}

TEST_CASE("golden: loglim")
{
    CHECK(cmd_loglim(gens("x-1\ny-1")) == "{\"dim\":2,\"full_sphere\":false,\"outer\":true,\"cells\":[]}\n");
    CHECK(cmd_loglim(gens("x+y+1\nx-y")) ==
          "{\"dim\":2,\"full_sphere\":false,\"outer\":true,\"cells\":[{\"eq\":[[1,-1]],\"ineq\":[[0,1],[1,0]]}]}\n");
    CHECK(cmd_loglim(gens("x+y+1\nx-y\n2*y+1")) ==
          "{\"dim\":2,\"full_sphere\":false,\"outer\":true,\"cells\":[]}\n");
    CHECK(cmd_loglim(gens("x*y-1")) ==
          "{\"dim\":2,\"full_sphere\":false,\"outer\":false,\"cells\":[{\"eq\":[[1,1]],\"ineq\":[]}]}\n");
    CHECK(cmd_loglim(gens("0\n0")) ==
          "{\"dim\":2,\"full_sphere\":true,\"outer\":true,\"warning\":\"all generators are zero\",\"cells\":[]}\n");
    CHECK(loglim::loglim_outer(gens("x-1\ny-1")).complex.is_empty());
}

TEST_CASE("golden: slopes")
{
    auto g = gens("(l-1)*(l*m^6+1)", ml);
    CHECK(cmd_slopes(g, 1, 8) == "{\"h\":1,\"coordinates\":[[0,1],[6,1]],\"slopes\":[\"0/1\",\"6/1\"]}\n");
    CHECK(slopes::detect_boundary_coordinates(sphdual::spherical_dual(g[0]), 8).size() == 2);
    CHECK_THROWS_AS(cmd_slopes(g, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(cmd_slopes(g, 1, 0), std::invalid_argument);

    auto two = parse_generators("l1 - 1", {"m1", "l1", "m2", "l2"});
    CHECK(cmd_slopes(two, 2, 1).rfind("{\"h\":2,", 0) == 0);
}

TEST_CASE("golden: torusknot")
{
    const std::string want = "# (2,3) torus knot, SL2 A-polynomial over m,l\n"
                             "# factor: -l + 1\n"
                             "# factor: m^6*l + 1\n"
                             "-m^6*l^2 + m^6*l - l + 1\n"
                             "# slopes: {\"h\":1,\"coordinates\":[[0,1],[6,1]],\"slopes\":[\"0/1\",\"6/1\"]}\n";
    CHECK(cmd_torusknot(2, 3, false, 8) == want);
    CHECK(knots::detected_slopes({2, 3}, 8) == std::set<std::string>{"0/1", "6/1"});

    // The emitted polynomial parses back to the expanded A-polynomial.
    auto g = parse_generators(cmd_torusknot(3, 4, false, 12), ml);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == knots::a_polynomial({3, 4}).expand());

    auto psl = cmd_torusknot(3, 5, true, 15);
    CHECK(psl.find("# psl2 relation: true\n") != std::string::npos);
    auto h = parse_generators(psl, {"M", "L"});
    REQUIRE(h.size() == 1);
    CHECK(h[0] == knots::a_bar_polynomial({3, 5}).expand());
    CHECK_THROWS_AS(cmd_torusknot(2, 4, false, 8), std::invalid_argument);
}

TEST_CASE("golden: sample")
{
    loglim::SamplingParams p;
    p.grid = 5;
    p.phases = 2;
    p.log_rho_min = -100;
    p.log_rho_max = 100;
    auto f = parse("x*y-1", xy);
    auto out = cmd_sample(f, p, SampleFormat::csv);
    CHECK(out.rfind("grid,sweep,phase,radius,x,y\n0,0,0,", 0) == 0);
    CHECK(out.find("# cluster,") != std::string::npos);
    auto run = loglim::sample_loglim(f, p);
    std::size_t rows = 0;
    for (char c : out)
        rows += c == '\n';
    const auto clusters = loglim::accumulation_clusters(run.points).size();
    CHECK(rows == 1 + run.points.size() + run.skipped.size() + clusters);

    auto plot = cmd_sample(f, p, SampleFormat::plotdata);
    CHECK(plot.rfind("# x y radius\n", 0) == 0);
}

TEST_CASE("determinism: every golden command twice")
{
    loglim::SamplingParams p;
    p.grid = 30;
    p.phases = 3;
    p.seed = 7;
    auto tre = gens("(l-1)*(l*m^6+1)", ml);
    CHECK(cmd_sample(tre[0], p, SampleFormat::csv) == cmd_sample(tre[0], p, SampleFormat::csv));
    CHECK(cmd_sphdual(tre, 1) == cmd_sphdual(tre, 4));
    CHECK(cmd_torusknot(3, 7, true, 21) == cmd_torusknot(3, 7, true, 21));
    CHECK(cmd_loglim(gens("x+y+1\nx-y")) == cmd_loglim(gens("x+y+1\nx-y")));
}
