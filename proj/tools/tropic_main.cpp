#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropic/cli.hpp"
#include "tropic/json_io.hpp"

using namespace tropic;

namespace {

std::vector<LaurentPolynomial> load(const std::vector<std::string>& paths, const std::string& vars)
{
    auto names = cli::parse_variable_list(vars);
    std::vector<LaurentPolynomial> out;
    for (const auto& path : paths)
    {
        auto gens = cli::parse_generators(cli::read_file(path), names);
        out.insert(out.end(), gens.begin(), gens.end());
    }
    if (out.empty())
        throw std::invalid_argument("no generators in input");
    return out;
}

int fail(const std::string& kind, const std::string& message, std::optional<std::size_t> position = std::nullopt)
{
    std::cerr << json_io::error_json(kind, message, position) << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Logarithmic limit sets, spherical duals and boundary slopes"};
    app.require_subcommand(1);

    std::string vars;
    std::vector<std::string> files;
    std::size_t h = 1;
    int height = 8;

    auto* newton = app.add_subcommand("newton", "Newton polytope vertices of each generator");
    newton->add_option("file", files, "Polynomial file")->required()->expected(1);
    newton->add_option("--vars", vars, "Variable order, e.g. x,y")->required();

    auto* sph = app.add_subcommand("sphdual", "Spherical dual of each generator");
    sph->add_option("file", files, "Polynomial file")->required()->expected(1);
    sph->add_option("--vars", vars, "Variable order")->required();

    auto* loglim = app.add_subcommand("loglim", "Limit set of the ideal generated by all inputs");
    loglim->add_option("files", files, "Polynomial files")->required();
    loglim->add_option("--vars", vars, "Variable order")->required();

    auto* slopes = app.add_subcommand("slopes", "Boundary curve coordinates detected by the limit set");
    slopes->add_option("file", files, "Polynomial file")->required()->expected(1);
    slopes->add_option("--vars", vars, "Variable order m1,l1,...,mh,lh")->required();
    slopes->set_help_flag("--help", "Print this help message and exit");
    slopes->add_option("--h", h, "Number of boundary tori")->check(CLI::PositiveNumber);
    slopes->add_option("--height", height, "Height bound for rational points")->check(CLI::PositiveNumber);

    std::int64_t p = 0, q = 0;
    bool psl2 = false;
    std::optional<int> knot_height;
    auto* knot = app.add_subcommand("torusknot", "A-polynomial of a torus knot and its slopes");
    knot->add_option("p", p)->required();
    knot->add_option("q", q)->required();
    knot->add_flag("--psl2", psl2, "Emit the PSL2 A-polynomial");
    knot->add_option("--height", knot_height, "Height bound (default max(8, |pq|))")->check(CLI::PositiveNumber);

    std::string rho_min = "e^-60000", rho_max = "e^60000", format = "csv";
    loglim::SamplingParams params;
    auto* sample = app.add_subcommand("sample", "Numerical samples of the log-image of a curve");
    sample->add_option("file", files, "Polynomial file")->required()->expected(1);
    sample->add_option("--vars", vars, "Variable order (two variables)")->required();
    sample->add_option("--rho-min", rho_min, "Smallest magnitude, a number or e^N");
    sample->add_option("--rho-max", rho_max, "Largest magnitude, a number or e^N");
    sample->add_option("--grid", params.grid, "Number of magnitudes")->check(CLI::PositiveNumber);
    sample->add_option("--phases", params.phases, "Random phases per magnitude")->check(CLI::PositiveNumber);
    sample->add_option("--seed", params.seed, "Random seed");
    sample->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "plotdata"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        std::cerr << json_io::error_json("usage", e.what()) << "\n";
        return 2;
    }

    try
    {
        const unsigned threads = cli::threads_from_environment();
        std::string out;
        if (newton->parsed())
            out = cli::cmd_newton(load(files, vars));
        else if (sph->parsed())
            out = cli::cmd_sphdual(load(files, vars), threads);
        else if (loglim->parsed())
            out = cli::cmd_loglim(load(files, vars), threads);
        else if (slopes->parsed())
            out = cli::cmd_slopes(load(files, vars), h, height, threads);
        else if (knot->parsed())
        {
            const auto pq = p * q < 0 ? -(p * q) : p * q;
            out = cli::cmd_torusknot(p, q, psl2, knot_height.value_or(static_cast<int>(std::max<std::int64_t>(8, pq))));
        }
        else if (sample->parsed())
        {
            auto gens = load(files, vars);
            if (gens.size() != 1)
                throw std::invalid_argument("sample takes exactly one generator");
            params.log_rho_min = cli::parse_log_magnitude(rho_min);
            params.log_rho_max = cli::parse_log_magnitude(rho_max);
            out = cli::cmd_sample(gens.front(), params,
                                  format == "csv" ? cli::SampleFormat::csv : cli::SampleFormat::plotdata);
        }
        std::cout << out;
        std::cout.flush();
        return std::cout ? 0 : 1;
    }
    catch (const ParseError& e)
    {
        return fail("parse", e.what(), e.position());
    }
    catch (const std::invalid_argument& e)
    {
        return fail("invalid_argument", e.what());
    }
    catch (const std::exception& e)
    {
        return fail("runtime", e.what());
    }
}
