#include "tropic/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tropic/json_io.hpp"
#include "tropic/knots.hpp"
#include "tropic/polytope.hpp"
#include "tropic/slopes.hpp"
#include "tropic/sphdual.hpp"

namespace tropic::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

std::vector<std::string> parse_variable_list(std::string_view text)
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::size_t start = 0;
    while (true)
    {
        auto comma = text.find(',', start);
        auto name = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (name.empty())
            throw std::invalid_argument("empty variable name in --vars");
        if (!seen.insert(name).second)
            throw std::invalid_argument("repeated variable name in --vars: " + name);
        out.push_back(name);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<LaurentPolynomial> parse_generators(std::string_view text, const std::vector<std::string>& variables)
{
    std::vector<LaurentPolynomial> out;
    std::size_t offset = 0;
    while (offset <= text.size())
    {
        auto nl = text.find('\n', offset);
        auto line = text.substr(offset, nl == std::string_view::npos ? std::string_view::npos : nl - offset);
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") != std::string_view::npos)
        {
            try
            {
                out.push_back(parse(line, variables));
            }
            catch (const ParseError& e)
            {
                throw ParseError(e.what(), offset + e.position());
            }
        }
        if (nl == std::string_view::npos)
            break;
        offset = nl + 1;
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_log_magnitude(std::string_view text)
{
    auto s = trim(text);
    std::size_t used = 0;
    double value = 0.0;
    const bool exponential = s.rfind("e^", 0) == 0;
    try
    {
        auto body = exponential ? s.substr(2) : s;
        value = std::stod(body, &used);
        if (used != body.size())
            throw std::invalid_argument("");
    }
    catch (const std::exception&)
    {
        throw std::invalid_argument("bad magnitude: " + s);
    }
    if (exponential)
        return value;
    if (!(value > 0.0))
        throw std::invalid_argument("magnitude must be positive: " + s);
    return std::log(value);
}

unsigned threads_from_environment()
{
    const char* v = std::getenv("TROPIC_THREADS");
    if (v == nullptr)
        return 1;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1 || n > 1024)
        throw std::invalid_argument("TROPIC_THREADS must be an integer in [1, 1024]");
    return static_cast<unsigned>(n);
}

std::string cmd_newton(const std::vector<LaurentPolynomial>& generators)
{
    std::string out;
    for (const auto& f : generators)
        out += json_io::polytope_json(polytope::newton_polytope(f)) + "\n";
    return out;
}

std::string cmd_sphdual(const std::vector<LaurentPolynomial>& generators, unsigned threads)
{
    std::string out;
    for (const auto& f : generators)
        out += json_io::complex_json(sphdual::spherical_dual(f, threads)) + "\n";
    return out;
}

std::string cmd_loglim(const std::vector<LaurentPolynomial>& generators, unsigned threads)
{
    auto approx = loglim::loglim_outer(generators, threads);
    std::optional<std::string> warning;
    if (approx.all_generators_zero)
        warning = "all generators are zero";
    return json_io::complex_json(approx.complex, generators.size() > 1, warning) + "\n";
}

std::string cmd_slopes(const std::vector<LaurentPolynomial>& generators, std::size_t h, int height,
                       unsigned threads)
{
    if (h < 1 || height < 1)
        throw std::invalid_argument("h and height must be at least 1");
    if (generators.empty())
        throw std::invalid_argument("no generators");
    if (generators.front().num_variables() != 2 * h)
        throw std::invalid_argument("slopes need 2h variables ordered m1,l1,...,mh,lh");
    auto approx = loglim::loglim_outer(generators, threads);
    return json_io::slopes_json(h, slopes::detect_boundary_coordinates(approx.complex, height)) + "\n";
}

std::string cmd_torusknot(std::int64_t p, std::int64_t q, bool psl2, int height)
{
    if (height < 1)
        throw std::invalid_argument("height must be at least 1");
    knots::TorusKnotParams k(p, q);
    auto factors = psl2 ? knots::a_bar_polynomial(k) : knots::a_polynomial(k);
    const auto& vars = factors.variables();
    auto product = factors.expand();

    std::string out = "# (" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ") torus knot, " +
                      (psl2 ? "PSL2" : "SL2") + " A-polynomial over " + vars[0] + "," + vars[1] + "\n";
    for (const auto& f : factors.factors())
        out += "# factor: " + render(f.polynomial) + "\n";
    if (psl2)
        out += std::string("# psl2 relation: ") + (knots::verify_psl2_relation(k) ? "true" : "false") + "\n";
    out += render(product) + "\n";
    auto coords = slopes::detect_boundary_coordinates(sphdual::spherical_dual(product), height);
    out += "# slopes: " + json_io::slopes_json(1, coords) + "\n";
    return out;
}

std::string cmd_sample(const LaurentPolynomial& f, const loglim::SamplingParams& params, SampleFormat format)
{
    auto run = loglim::sample_loglim(f, params);
    const auto& vars = f.variables();
    std::string out;
    if (format == SampleFormat::csv)
    {
        out += "grid,sweep,phase,radius," + vars[0] + "," + vars[1] + "\n";
        for (const auto& s : run.points)
            out += std::to_string(s.grid_index) + "," + std::to_string(s.sweep) + "," + std::to_string(s.phase) +
                   "," + number(s.radius) + "," + number(s.direction[0]) + "," + number(s.direction[1]) + "\n";
    }
    else
    {
        out += "# " + vars[0] + " " + vars[1] + " radius\n";
        for (const auto& s : run.points)
            out += number(s.direction[0]) + " " + number(s.direction[1]) + " " + number(s.radius) + "\n";
    }
    for (const auto& k : run.skipped)
        out += "# skipped," + std::to_string(k.grid_index) + "," + std::to_string(k.sweep) + "," +
               std::to_string(k.phase) + "\n";
    for (const auto& c : loglim::accumulation_clusters(run.points))
        out += "# cluster," + std::to_string(c.size) + "," + number(c.center[0]) + "," + number(c.center[1]) + "\n";
    return out;
}

} // namespace tropic::cli
